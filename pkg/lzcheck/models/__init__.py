"""
Models initialization
"""
