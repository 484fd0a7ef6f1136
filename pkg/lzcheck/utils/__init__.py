"""
Utilities initialization
"""
