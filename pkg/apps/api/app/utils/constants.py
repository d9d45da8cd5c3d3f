"""Constantes del sistema IsoN."""

# Cotas de enumeración por defecto (max_complement, max_offset)
DEFAULT_MAX_COMPLEMENT = 3
DEFAULT_MAX_OFFSET = 4

# Cotas para los triples exhaustivos de asociatividad
DEFAULT_TRIPLE_BOUNDS = (2, 3)

# Universo chico de los demás chequeos cúbicos o exponenciales
SMALL_UNIVERSE_BOUNDS = (1, 2)

# Triples muestreados para asociatividad
DEFAULT_SAMPLED_TRIPLES = 100_000

# Semilla para muestreo y fuzzing reproducibles
DEFAULT_SAMPLE_SEED = 20211

# Hilos para `verify all`
DEFAULT_VERIFY_WORKERS = 4

# Cotas de los chequeos por exponentes
BICYCLIC_MAX_EXPONENT = 8
COMMUTATION_MAX_POWER = 6
COMMUTATION_MAX_N0 = 6
COMMUTATION_MAX_A_SIZE = 2
CHAIN_DEPTH = 20
CONJUGATION_SEARCH_DEPTH = 10
CONJUGATION_STABILITY_MAX = 5
MG_WITNESS_MAX_TAIL = 12
FUZZ_STRINGS = 1_000

# Máximo de fallos que se reportan por suite
MAX_REPORTED_FAILURES = 10

# Alfabeto usado por el fuzzer de palabras; incluye dígitos y espacios no ASCII
FUZZ_ALPHABET = "abIZeps()[]{}^;=,+-An0dom shift iso0123456789²³¹٣०\u00a0λé∞"

# Límites del parser de palabras
MAX_NESTING_DEPTH = 100
MAX_NUMERAL_DIGITS = 18

# Cotas reducidas para chequeos cuadráticos u oráculos costosos
REDUCED_BOUNDS = (2, 3)
POINTWISE_MAX_POINT = 12
STABILITY_DEPTH = 10
SANDWICH_MAX_EXPONENT = 2
SANDWICH_DEPTH = 5
TOPOLOGY_SAMPLED_SETS = 8
TOPOLOGY_MAX_EXCLUDED = 3
FUZZ_MAX_LENGTH = 20
