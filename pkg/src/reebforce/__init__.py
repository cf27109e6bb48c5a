"""Exact and numerical tools for Reeb dynamics on the 3-sphere:
quadratic-irrational arithmetic, Conley-Zehnder indices, asymptotic
intersection numbers, orbit forcing for star-shaped models, geodesic
rotation numbers, open-book orbit growth, and a numerical flow oracle."""

__version__ = "0.1.0"

from .errors import (
    FieldMixError,
    HypothesisError,
    InputError,
    OracleError,
    ReebforceError,
    ResonanceError,
)
from .surd import CoprimePair, Surd, enumerate_coprime_in_interval
from .orbits import OrbitSpec, alpha_minus, alpha_plus, cz, parity, sft_good
from .intersection import (
    AsymptoticMap,
    BranchedCoverBound,
    PunctureDatum,
    branched_cover_bound,
    cylinder,
    decomposition_check,
    delta_infinity_over_link,
    delta_pair,
    delta_total,
    omega_minus,
    omega_plus,
    plane,
    star,
)
from .star_models import (
    CCHResult,
    GammaProfile,
    HopfClass,
    TorusOrbitFamily,
    cch_hopf_complement,
    classify_orbits,
    ellipsoid_orbits,
    example3_cch,
    forcing_hopf,
    linking_torus_orbits,
)
from .geodesic import (
    CurvatureProfile,
    RotationEstimate,
    angenent_table,
    cz_zero_dictionary,
    rho,
    sturm_zero_count,
)
from .openbook import (
    FIGURE_EIGHT,
    MonodromyMatrix,
    NielsenClassLabel,
    action_bound,
    binding_cz,
    class_labels,
    growth_report,
    monodromy_hamiltonian,
    nontrivial_class_count,
    periodic_point_count,
    time_one_check,
)
from .flow import (
    FlowState,
    LinearizedState,
    Trajectory,
    constant_rotation_phase,
    detect_closed_orbit,
    integrate_model_flow,
    numeric_cz,
    numeric_linking,
    torus_curve,
)
