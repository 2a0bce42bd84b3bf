# Hace que app/algebra sea un paquete Python.
