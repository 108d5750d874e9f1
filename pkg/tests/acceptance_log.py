"""Shared list of acceptance outcomes, printed by the terminal-summary hook."""

LINES = []
