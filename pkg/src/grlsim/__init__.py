"""Range-free wireless sensor network localization simulator.

Compares a golden-ratio weighted centroid localizer against DV-Hop and
plain centroid baselines on unit-disk topologies, with a per-localization
energy model and a reproducible Monte Carlo harness.
"""

from .deployment import (
    AnchorLayout,
    Deployment,
    deploy_anchors_grid,
    deploy_anchors_phi_chain,
    deploy_anchors_random,
    deploy_anchors_sunflower,
    deploy_unknowns_uniform,
)
from .energy import (
    ALGORITHMS,
    EmptyTrialWarning,
    EnergyParams,
    NodeMetrics,
    TrialSummary,
    energy_hop_sweep,
    localization_energy,
    summarize_trial,
)
from .experiment import (
    ConfigError,
    ExperimentConfig,
    ParseError,
    ResultsBundle,
    TrialDetail,
    ValidationError,
    config_from_dict,
    load_config,
    run_experiment,
)
from .geometry import GOLDEN_ANGLE, PHI, FieldSpec, Point2D, distance
from .kernels import HAVE_COMPILED, active_implementation
from .localization import (
    ArityError,
    CollinearAnchors,
    DegenerateHops,
    DisconnectedAnchors,
    Estimate,
    LocalizationError,
    centroid_localize,
    dvhop_avg_hop_size,
    dvhop_localize,
    dvhop_per_anchor_hop_sizes,
    grl_localize,
    grl_weights,
    multilaterate,
)
from .network import UNREACHABLE, Graph, HopTable, Topology, build_graph, compute_hops, scaled_range
from .report import (
    read_summary_csv,
    write_energy_sweep_csv,
    write_field_svg,
    write_pernode_csv,
    write_summary_csv,
)
from .rng import RngStream, derive_trial_stream

__version__ = "0.1.0"
