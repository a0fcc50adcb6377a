"""Command-line surface: ring configs, the series grammar and subcommands."""
