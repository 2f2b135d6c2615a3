"""
Input errors raised across the toolkit
"""

from typing import Optional


class SocialCloudInputError(ValueError):
    """Raised when a caller violates an operation's precondition"""


class EdgeListError(SocialCloudInputError):
    """Raised for malformed edge-list text; remembers the offending line"""

    def __init__(self, message: str, line_number: Optional[int] = None):
        self.line_number = line_number
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)
