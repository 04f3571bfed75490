"""Contact structures compatible with fibered Seifert multilinks in homology 3-spheres."""
from .cabling import CablingSpec, classify_cabling, knot_parent
from .classifier import Verdict, VerdictKind, Witness, WitnessKind, classify, classify_s3, strongly_quasipositive
from .contact_curve import build_full_form, build_tube, lemma54_feasibility, select_radii, verify_contact
from .fibration import SeifertMultilink, is_fibered, multilink, normalize_ptp
from .notation import format_multilink, parse_multilink
from .seifert import SeifertData, seifert

__all__ = [
    "CablingSpec", "classify_cabling", "knot_parent",
    "Verdict", "VerdictKind", "Witness", "WitnessKind", "classify", "classify_s3", "strongly_quasipositive",
    "build_full_form", "build_tube", "lemma54_feasibility", "select_radii", "verify_contact",
    "SeifertMultilink", "is_fibered", "multilink", "normalize_ptp",
    "format_multilink", "parse_multilink",
    "SeifertData", "seifert",
]
