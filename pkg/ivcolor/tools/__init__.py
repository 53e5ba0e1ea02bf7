# Subcommand implementations, discovered by registry.py
