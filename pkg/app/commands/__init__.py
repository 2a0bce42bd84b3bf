# Hace que app/commands sea un paquete Python.
