# Hace que app/counting sea un paquete Python.
