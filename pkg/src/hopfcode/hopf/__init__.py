"""Hopf structures and the named examples."""
