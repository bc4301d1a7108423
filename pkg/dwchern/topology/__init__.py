"""This package models 3-manifolds through their fundamental groups and
computes Dijkgraaf-Witten invariants.
"""
