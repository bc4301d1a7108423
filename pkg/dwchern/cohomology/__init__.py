"""This package defines finite groups and their cohomology: chains,
cochains, Bockstein maps, transfers and Chern-class cocycles.
"""
