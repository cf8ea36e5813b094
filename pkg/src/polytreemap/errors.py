"""Exception hierarchy shared across the package."""


class TreemapError(Exception):
    """Base class for all errors raised by this package."""


# --- tree validation ---------------------------------------------------------

class MalformedTree(TreemapError):
    """The input is not a rooted tree (cycle, multiple parents, missing root)."""


class NonPositiveLeafWeight(TreemapError):
    """A leaf carries a weight <= 0."""


class InconsistentInternalWeight(TreemapError):
    """A supplied internal weight disagrees with the sum of its children."""


class DomainError(TreemapError):
    """An argument lies outside the documented domain of an operation."""


# --- geometry ----------------------------------------------------------------

class DegeneratePolygon(TreemapError):
    """Polygon has (near-)zero area or too few usable vertices."""


class NotOrthoconvex(TreemapError):
    """Operation requires an orthoconvex polygon."""


class NoIntersection(TreemapError):
    """A cutting line does not properly intersect the polygon interior."""


# --- partition lemmas --------------------------------------------------------

class TooFewItems(TreemapError):
    """Two-bin partition needs at least two items."""


class BadWeights(TreemapError):
    """Weights are non-positive or do not sum to the target area."""


class FractionOutOfRange(TreemapError):
    """An axis cut was requested at a fraction outside [1/3, 2/3]."""


# --- layout engines ----------------------------------------------------------

class CasePreconditionViolated(TreemapError):
    """A recursion case was entered although its precondition does not hold."""


class SearchFailed(TreemapError):
    """A structural search that is guaranteed to succeed found nothing."""


class FragmentedRegion(TreemapError):
    """Fragments of one node do not union into a single simple polygon."""


class EmptyInstance(TreemapError):
    """A single-level instance contains no weights."""


class Overfull(TreemapError):
    """Square-packing instance whose squares exceed the container area."""


class TooLarge(TreemapError):
    """Square-packing instance beyond the exhaustive oracle's size limits."""


# --- verification / IO -------------------------------------------------------

class MissingRegion(TreemapError):
    """A layout lacks a region for some tree node."""


class MalformedRegion(TreemapError):
    """A layout region is not a valid polygon."""


class ParseError(TreemapError):
    """An input file could not be parsed; message carries the location."""


class BadSpec(TreemapError):
    """Random-tree generation parameters are unsatisfiable."""
