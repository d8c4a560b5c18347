"""
CANREL CLI Module
"""
