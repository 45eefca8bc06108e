"""Fano and weak Fano classification of BSDH varieties."""
