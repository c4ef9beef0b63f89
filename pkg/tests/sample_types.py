"""Small hand-built tropical cover types shared by the tests.

Vertex i is the vertex with label i+1.  Bounded edges are (tail, head, weight)
with the tail mapping below the head; ends are (vertex, direction).
"""

from trophurwitz.tropical import CombinatorialType, TypeClass


def loop_type() -> CombinatorialType:
    """Degree {-1,-1,-2,1,3}, genus 1: two ends of weight 1 join, a weight-2
    end joins in, the weight-4 strand splits 2+2 and rejoins, then splits 1+3.
    The two parallel weight-2 edges are listed first."""
    return CombinatorialType(
        5,
        ((2, 3, 2), (2, 3, 2), (0, 1, 2), (1, 2, 4), (3, 4, 4)),
        ((0, -1), (0, -1), (1, -2), (4, 1), (4, 3)),
    )


def triangle_type() -> CombinatorialType:
    """Degree {-3,1,2}, genus 1: a 3 splits 2+1, the 2 sheds a 1 and the two 1s rejoin."""
    return CombinatorialType(
        3,
        ((0, 1, 2), (1, 2, 1), (0, 2, 1)),
        ((0, -3), (1, 1), (2, 2)),
    )


def three_order_class() -> TypeClass:
    """Degree {-3,-1,1,1,1,1}, genus 0, with vertex orders V1<V3 and V1<V2<V4."""
    return TypeClass(
        CombinatorialType(
            4,
            ((0, 2, 2), (0, 1, 1), (1, 3, 2)),
            ((0, -3), (1, -1), (2, 1), (2, 1), (3, 1), (3, 1)),
        )
    )


def join_split_type() -> CombinatorialType:
    """Two ends of weight 1 join and the weight-2 strand splits again."""
    return CombinatorialType(2, ((0, 1, 2),), ((0, -1), (0, -1), (1, 1), (1, 1)))


def heavy_wiener_type() -> CombinatorialType:
    """A weight-4 strand splits 2+2 and rejoins: a wiener with loop row (0,2,-2)."""
    return CombinatorialType(2, ((0, 1, 2), (0, 1, 2)), ((0, -4), (1, 4)))


def contracted_loop_type() -> CombinatorialType:
    """Two 4-valent vertices joined by a loop of two weight-0 edges; each carries
    an in-end and an out-end of weight 1.  The loop imposes no condition."""
    return CombinatorialType(2, ((0, 1, 0), (0, 1, 0)), ((0, -1), (0, 1), (1, -1), (1, 1)))


def crossed_class() -> TypeClass:
    """Two cuts feeding two joins crosswise (genus 1, degree {-2,-2,2,2}).
    Its vertex symmetries swap the cuts and the joins without fixing a vertex."""
    return TypeClass(
        CombinatorialType(
            4,
            ((0, 2, 1), (0, 3, 1), (1, 2, 1), (1, 3, 1)),
            ((0, -2), (1, -2), (2, 2), (3, 2)),
        )
    )
