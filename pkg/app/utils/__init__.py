"""Utility helpers."""

