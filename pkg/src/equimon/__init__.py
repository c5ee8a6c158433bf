"""equimon: monoids of equivariant transformations of finite group actions.

Build a finite group and an action, enumerate every transformation commuting
with the action, compute the Green's relations and eggbox structure of the
resulting monoid, and detect, classify and factor its elementary collapsings.
"""

from .groups import (
    Group,
    Subgroup,
    SubgroupClass,
    build_group_from_table,
    build_named_group,
    cyclic_group,
    conj_leq,
    conjugacy_class_of_subgroup,
    conjugate_subgroup,
    dihedral_group,
    n_conjugacy_class,
    normalizer,
    product_group,
    subgroup,
    subgroup_generated,
    subgroups_conjugate,
    symmetric_group,
)
from .gsets import (
    Box,
    GSet,
    Orbit,
    box_leq,
    box_representatives,
    boxes,
    build_coset_gset,
    build_gset,
    is_invariant_subset,
    orbit,
    orbits,
    stabilizer,
)
from .endos import (
    EquivMap,
    KernelPartition,
    compose,
    count_endos,
    constant_maps,
    enumerate_endos,
    exists_bijection_sending,
    exists_map_sending,
    extend_to_bijection,
    fixed_points,
    from_representative_images,
    identity_map,
    image,
    is_valid_constant,
    kernel,
    make_map,
    units,
)
from .green import (
    GreenStructure,
    MonoidTable,
    d_related,
    emit_eggbox,
    green_structure,
    h_related,
    j_related,
    l_related,
    principal_left_ideal,
    principal_right_ideal,
    r_related,
    two_sided_ideal,
)
from .collapsings import (
    CollapsingType,
    CollapsingWitness,
    all_collapsings,
    bijective_support,
    collapsing_type,
    detect_by_kernel_shape,
    fixing_collapsing,
    is_elementary_collapsing,
    is_fixing_collapsing,
    orbit_swap,
    r_factor_through_fixing,
)
from .verify import (
    ALL_CHECKS,
    CheckReport,
    CorpusSpec,
    random_gset,
    replay_counterexample,
    run_checks,
    run_corpus,
)

__all__ = [name for name in dir() if not name.startswith("_")]

__version__ = "0.1.0"
