//! JSON reports. Each one carries its inputs so it can be re-read and
//! re-verified.

use monocycle::boundary_ideal::BoundaryIdealResult;
use monocycle::golod::InclusionReport;
use monocycle::koszul::PairingEntry;
use monocycle::linquot::{BasisVerification, LinQuotFailure, LinearQuotientOrder, MonomialBasisCycle, Recognition};
use monocycle::simplicial_matroid::{Circuit, CircuitSource};
use monocycle::symmetric::{Partition, SymmetricIdealSpec, VpResult};
use monocycle::{FieldSpec, Monomial, MonomialIdeal, VarSet};
use serde::{Deserialize, Serialize};

#[derive(Debug, Serialize, Deserialize)]
pub struct BoundaryIdealReport {
    pub ideal: MonomialIdeal,
    pub sigma: VarSet,
    pub field: FieldSpec,
    pub boundary: BoundaryIdealResult,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct IsBoundaryReport {
    pub ideal: MonomialIdeal,
    pub monomial: Monomial,
    pub sigma: VarSet,
    pub field: FieldSpec,
    pub boundary: bool,
    /// A preimage chain, when requested and the cycle is a boundary.
    pub witness: Option<String>,
}

#[derive(Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologyRecord {
    pub degree: Monomial,
    pub p: usize,
    pub dim: usize,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct HomologyReport {
    pub ideal: MonomialIdeal,
    pub field: FieldSpec,
    pub records: Vec<HomologyRecord>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct BettiReport {
    pub ideal: MonomialIdeal,
    pub field: FieldSpec,
    pub betti: Vec<usize>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct InclusionCheckReport {
    pub ideal: MonomialIdeal,
    pub field: FieldSpec,
    pub verdict: String,
    pub report: InclusionReport,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct PairingReport {
    pub ideal: MonomialIdeal,
    pub field: FieldSpec,
    pub p: usize,
    pub q: usize,
    pub vanishes: bool,
    pub entries: Vec<PairingEntry>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct VpReport {
    pub spec: SymmetricIdealSpec,
    pub holds: bool,
    pub results: Vec<VpResult>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct PrincipalReport {
    pub lambda: Partition,
    pub golod: bool,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct ShiftedReport {
    pub spec: SymmetricIdealSpec,
    pub shifted: bool,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct BasisReport {
    pub ideal: MonomialIdeal,
    pub field: FieldSpec,
    pub order: Option<LinearQuotientOrder>,
    pub cycles: Vec<MonomialBasisCycle>,
    pub verification: Option<BasisVerification>,
    pub failure: Option<LinQuotFailure>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct LinquotCheckReport {
    pub ideal: MonomialIdeal,
    pub recognition: Recognition,
    /// The order used for the basis construction, or any order with linear
    /// quotients if the construction fails.
    pub order: Option<LinearQuotientOrder>,
    pub regular: Option<bool>,
    pub lifts: Option<Vec<usize>>,
    pub failure: Option<LinQuotFailure>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct LinquotBettiReport {
    pub ideal: MonomialIdeal,
    pub order: Option<LinearQuotientOrder>,
    pub betti: Option<Vec<usize>>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct CircuitsReport {
    pub n: usize,
    pub p: usize,
    pub field: FieldSpec,
    pub sigma: VarSet,
    pub source: CircuitSource,
    pub circuits: Vec<Circuit>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct FixtureLine {
    pub name: String,
    pub passed: bool,
    pub detail: Option<String>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct SelftestReport {
    pub passed: usize,
    pub failed: usize,
    pub fixtures: Vec<FixtureLine>,
}
