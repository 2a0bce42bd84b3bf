# Hace que app/kernel sea un paquete Python.
