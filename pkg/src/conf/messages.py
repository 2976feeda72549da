ZERO_DENOMINATOR = "Denominator must not be zero"

DIVISION_BY_ZERO = "Division by an exact zero"

NEGATIVE_RADICAND = "Cannot take the square root of a negative number"

TOWER_LIMIT_EXCEEDED = "Quadratic tower depth {depth} exceeds the limit {limit}"

NOT_A_RATIONAL = "Not a rational number: {value!r}"

DEGENERATE_POLYGON = "Polygon has zero area"

TOO_FEW_VERTICES = "Polygon needs at least 3 non-collinear vertices"

NOT_SIMPLE = "Polygon is not simple"

NOT_CONVEX = "Polygon is not convex"

NO_EAR = "Triangulation failed: no ear found"

NOT_A_RECTANGLE = "Expected an axis-aligned rectangle"

NOT_A_TRIANGLE = "Expected a triangle"

INVALID_WIDTH = "Target width must be positive"

NON_POSITIVE_LEG = "Cathetus lengths must be positive"

NON_POSITIVE_SIDE = "Side lengths must be positive"

NGON_TOO_SMALL = "A regular polygon needs n >= 3"

UNSUPPORTED_NGON = "No exact regular {n}-gon; supported n are {supported}"

AREA_MISMATCH = "Total areas differ: {source} != {target}"

MIDSPACE_MISMATCH = "Intermediate polygon lists of the two dissections differ"

BAD_PIECE_INDEX = "Piece {index} references a missing {side} polygon {ref}"

REFLECTIONS_UNSUPPORTED = "allow_reflections is not supported; only proper motions are accepted"

INVALID_FILE = "Cannot read {path}: {error}"

ANGLE_AT_C_NOTE = (
    "exact angle C1-C-C2 is 150 degrees (cos = -sqrt(3)/2); "
    "the printed argument states 120 degrees, which contradicts its own 30-degree step"
)

MIRRORED_NOTE = "mirrored senses: pentagon-based checks are not asserted"

EMPTY_NGON_RANGE = "Empty range of n: {first}..{last}"

CONCLUSION_PREMISES_FAILED = "not concluded: {names} failed"
