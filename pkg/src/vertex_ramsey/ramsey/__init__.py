"""Degeneracy, the certifying colorer and exact Ramsey/density decisions."""
