"""Errors, budgets and the check runner shared by the suites and the CLI."""
