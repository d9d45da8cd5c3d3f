"""API FastAPI de IsoN."""
