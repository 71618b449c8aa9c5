"""Normal fans of graph cubeahedra and toric Fano / weak Fano tests.

Typical use::

    from cubeahedra import parse_graph, build_fan, classify_fan
    G = parse_graph("3\\n1 2\\n2 3")
    classify_fan(build_fan(G)).verdict   # Verdict.WEAK_FANO
"""

from .errors import CapacityError, ContractError, FanIntegrityError, GraphFormatError
from .graphs import (
    Graph,
    connected_components,
    enumerate_tubes,
    graph_fano_test,
    is_connected,
    members,
    nodeset,
)
from .graphio import parse_edge_list, parse_graph, parse_graph6, to_graph6
from .forbidden import (
    ForbiddenWitness,
    Kind,
    extract_cycle_or_diamond,
    find_forbidden,
    graph_weakfano_test,
    is_chordal,
)
from .fan import Bar, Fan, Tube, build_fan, compatible, maximal_nerve_sets, ray_vector, tube, verify_fan
from .intersection import (
    Classification,
    Verdict,
    Wall,
    classify_fan,
    classify_graph,
    enumerate_walls,
    find_wall,
    graph_verdict,
    intersection_number,
    wall_relation,
    witness_nerve,
    witness_wall,
)
from .crosscheck import CensusRecord, cross_validate, enumerate_graphs

__version__ = "0.1.0"
