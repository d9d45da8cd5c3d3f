"""Routers de la API IsoN."""
