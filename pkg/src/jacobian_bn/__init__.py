from .jacobian import JacobianBasis, TorusPoint, abel_jacobi, abel_jacobi_point, jacobian_basis, lattice_rank
from .scan import WrdScan, scan_Wrd, effective_locus_scan, lattice_divisors
from .bn_rank import BnRankCertificate, bn_rank, is_dominated
from .linsys import linsys_enum
from .sweep import FamilySpec, family_sweep
from .cases import CaseCheck, w13_case_check
