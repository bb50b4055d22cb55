"""Adapters - output formats and the command-line surface"""
