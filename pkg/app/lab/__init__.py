# Hace que app/lab sea un paquete Python.
