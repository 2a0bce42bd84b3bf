# app/__init__.py
# Paquete raíz del laboratorio rsdist.
__version__ = "0.1.0"
