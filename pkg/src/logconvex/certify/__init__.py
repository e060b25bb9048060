"""Patchworks, positivity certificates and sequence property checks."""

from .certificates import (
    BoundCertificate,
    MonotonicityCertificate,
    certify_bounds,
    certify_increasing,
    dumps,
)
from .patchwork import (
    ContinuityError,
    Patchwork,
    PatchworkSpec,
    PoleError,
    build_patchwork,
    integer_point_mismatches,
)
from .positivity import PositivityRecord, prove_positive
from .verify import VerificationError, verify_certificate
from .checks import (
    ConvexityReport,
    InterlaceReport,
    check_log_behavior,
    interlace_check,
    newton_normalized_logconcavity,
)
from .limits import (
    alpha_root,
    asymptotic_check_motzkin,
    limit_report,
    series_identity_check,
    surd_in_interval,
)
