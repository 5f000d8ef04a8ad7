"""
Number formatting utilities for the pseudoseg_census package.
"""

import pandas as pd


def format_value(value, format_type, config):
    """
    Format a value based on format type.

    Args:
        value: The value to format.
        format_type (str): Type of formatting to apply ('log2', 'ratio',
            'counts', 'text').
        config (dict): Configuration settings.

    Returns:
        str: Formatted value as string.
    """
    if value is None or (isinstance(value, (float, int)) and pd.isna(value)):
        return ""

    if format_type == "text" or isinstance(value, str):
        return str(value)

    if format_type == "log2":
        return format_decimal(value, config["formatting"]["log2"])
    elif format_type == "ratio":
        return format_decimal(value, config["formatting"]["ratio"])
    elif format_type == "counts":
        return format_counts(value, config)
    else:
        return str(value)


def format_decimal(value, settings):
    """
    Fixed-point text with trailing zeros (and a bare point) removed.

    Args:
        value (float): The value to format.
        settings (dict): Section with 'decimal_places'.
    """
    decimal_places = settings.get("decimal_places", 6)
    formatted = f"{float(value):.{decimal_places}f}"
    if "." in formatted:
        formatted = formatted.rstrip("0").rstrip(".")
    return formatted


def format_counts(value, config):
    """Integer count, with comma separators when show_commas is set."""
    if config["formatting"]["counts"].get("show_commas", False):
        return f"{int(value):,}"
    return str(int(value))
