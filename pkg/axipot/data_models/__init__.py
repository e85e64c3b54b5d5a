"""
axipot data models.
"""
