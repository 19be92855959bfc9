"""Command-line surface: model files, commands and reports."""
