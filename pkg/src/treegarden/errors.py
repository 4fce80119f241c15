"""Exception hierarchy shared by the whole package."""


class TreeGardenError(Exception):
    """Base class for all errors raised by treegarden."""


# --- graph construction ---------------------------------------------------

class GraphConstructionError(TreeGardenError, ValueError):
    pass


class SelfLoopError(GraphConstructionError):
    def __init__(self, edge_index):
        super().__init__(f"edge {edge_index} is a self-loop")
        self.edge_index = edge_index


class DuplicateEdgeError(GraphConstructionError):
    def __init__(self, edge_index):
        super().__init__(f"edge {edge_index} duplicates an earlier edge")
        self.edge_index = edge_index


class VertexOutOfRangeError(GraphConstructionError):
    def __init__(self, vertex, n):
        super().__init__(f"vertex {vertex} out of range 0..{n - 1}")
        self.vertex = vertex


# --- trees ----------------------------------------------------------------

class NotATreeError(TreeGardenError, ValueError):
    pass


class NotAChordError(TreeGardenError, ValueError):
    pass


class UnknownEdgeError(TreeGardenError, ValueError):
    pass


# --- enumeration ----------------------------------------------------------

class DisconnectedError(TreeGardenError, ValueError):
    pass


class TooLargeError(TreeGardenError, ValueError):
    pass


class GuardTrippedError(TreeGardenError):
    """Raised when the exact spanning-tree count exceeds the guard threshold."""

    def __init__(self, count, threshold):
        super().__init__(
            f"refusing enumeration: {count} spanning trees exceeds threshold {threshold}"
        )
        self.count = count
        self.threshold = threshold


# --- pipeline -------------------------------------------------------------

class ProcessorError(TreeGardenError):
    """A processor raised while handling a specific tree."""

    def __init__(self, tree_index):
        super().__init__(f"processor failed at tree {tree_index}")
        self.tree_index = tree_index


# --- text formats ---------------------------------------------------------

class FormatError(TreeGardenError, ValueError):
    pass


class BadCharError(FormatError):
    pass


class LongFormUnsupportedError(FormatError):
    pass


class TrailingGarbageError(FormatError):
    pass


class TruncatedLineError(FormatError):
    pass


class RaggedRowsError(FormatError):
    pass


class BadTokenError(FormatError):
    pass


class BadColumnError(FormatError):
    def __init__(self, column, message=None):
        super().__init__(message or f"incidence column {column} must contain exactly two 1s")
        self.column = column


class CountMismatchError(FormatError):
    pass


class EmptyInputError(FormatError):
    pass
