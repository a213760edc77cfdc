"""powercolor: verify, classify, and search for trivially power-colorable
finite graphs."""

from .budget import Budget, DEFAULT_BUDGET
from .coloring import (
    Coloring,
    ColoringCount,
    chromatic_number,
    count_colorings,
    enumerate_colorings,
    is_proper,
    is_tight_coloring,
    is_tight_graph,
)
from .cliques import (
    CliqueStructure,
    clique_connected_components,
    cliques_of_size,
    is_strongly_cliqued,
    is_weakly_cliqued,
    maximal_cliques,
)
from .cographs import (
    Cotree,
    EquivalenceReport,
    build_cotree,
    construction_trace,
    cotree_to_graph,
    equivalence_report,
    evaluate_trace,
    exists_tight_coloring,
    is_cograph_p4,
)
from .errors import (
    BudgetExceededError,
    CapacityError,
    ImproperColoringError,
    InternalCheckError,
    NontrivialColoringError,
    NotACographError,
    NotWeaklyCliquedError,
    PowerColorError,
)
from .graphs import (
    DEFAULT_CAPACITY,
    Graph,
    ProductSpace,
    bowtie_graph,
    complement,
    complete_graph,
    complete_multipartite,
    connected_components,
    cycle_graph,
    disjoint_union,
    empty_graph,
    graph6_dumps,
    graph6_loads,
    graph_from_json,
    graph_to_json,
    induced_subgraph,
    is_connected,
    path_graph,
    power,
    tensor_product,
)
from .partitions import (
    Partition,
    PrincipalUltrafilterWitness,
    all_partitions,
    extract_ultrafilter,
    index_block,
    index_family,
    meet,
    refines,
    restrict_to_partition,
    ultrafilter_coloring,
)
from .triviality import (
    Finding,
    PowerResult,
    PowerTrivialityReport,
    ProductTrivialityReport,
    TheoremVerdict,
    TrivialityWitness,
    classify_coloring,
    construct_nontrivial_square,
    counterexample_search,
    decide_by_theorems,
    product_triviality_check,
    read_findings,
    verify_power_triviality,
    write_findings,
)

__version__ = "0.1.0"
