# Hace que app/utils sea un paquete Python.
