#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Geometry Exceptions

Errors raised by the exact polyhedral kernel.
"""


class GeometryError(ValueError):
    """Base class for polyhedral computation errors"""


class DimensionMismatchError(GeometryError):
    """Inputs live in different ambient dimensions"""


class EmptyInputError(GeometryError):
    """A required generator list is empty"""


class EmptyPolyhedronError(GeometryError):
    """The polyhedron describes the empty set"""


class UnboundedPolyhedronError(GeometryError):
    """A bounded polyhedron was required"""


class NotPointedError(GeometryError):
    """The polyhedron contains a line, so it has no vertices"""


class MalformedProblemError(GeometryError):
    """LP rows do not match the declared variable count"""


class UnboundedSupportError(GeometryError):
    """Support function is -infinity for the requested direction"""
