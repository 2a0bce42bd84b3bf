# Hace que app/bounds sea un paquete Python.
