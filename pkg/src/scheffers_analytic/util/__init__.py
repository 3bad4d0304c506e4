# SPDX-License-Identifier: MIT
"""Utility helpers shared by the I/O and reporting modules."""
