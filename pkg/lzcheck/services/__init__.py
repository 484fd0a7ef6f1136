"""
Services initialization
"""
