"""Numerical oracles that check kinematics and dynamics by independent routes."""
