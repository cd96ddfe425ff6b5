//! Serializable report types. Field order is fixed by declaration, so a
//! given config always serializes to identical bytes.

use serde::Serialize;

#[derive(Serialize)]
pub struct Envelope<T: Serialize> {
    pub tool: &'static str,
    pub version: &'static str,
    pub command: String,
    pub seed: u64,
    pub cap: Option<usize>,
    pub budget: Option<u64>,
    pub workers: Option<usize>,
    pub inputs: Vec<InputDigest>,
    pub result: T,
}

#[derive(Serialize)]
pub struct InputDigest {
    pub source: String,
    pub hash: String,
}

/// FNV-1a over the canonical serialized form of an input.
pub fn fnv1a_hex(bytes: &[u8]) -> String {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for &b in bytes {
        h ^= b as u64;
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    format!("fnv1a:{h:016x}")
}

#[derive(Serialize)]
pub struct ValidateResult {
    pub n_qubits: usize,
    pub n_checks: usize,
    pub abelian: bool,
    pub minus_one_in_group: bool,
    pub in_t: bool,
    pub in_t_diagnostic: Option<String>,
    pub generator_syndromes_zero: bool,
}

#[derive(Serialize)]
pub struct DimResult {
    pub n_qubits: usize,
    pub k_bruteforce: usize,
    pub r_direct: Option<usize>,
    pub s_gcd: Option<usize>,
    pub k_formula: Option<usize>,
    pub formula_applicable: bool,
    pub agreement: bool,
    pub closed_form_3dxyz: Option<usize>,
}

#[derive(Serialize)]
pub struct DistanceResult {
    pub n_qubits: usize,
    pub cap: usize,
    pub exact_d: Option<usize>,
    pub lower_bound: usize,
    pub upper_bound: Option<usize>,
    pub completed_cap: usize,
    pub budget_exhausted: bool,
    pub supports_examined: u64,
    pub witness: Option<String>,
    pub representative_lower_bound: Option<usize>,
    pub dstar: Option<DstarResult>,
}

#[derive(Serialize)]
pub struct DstarResult {
    pub value: usize,
    pub exact: bool,
    pub strategy: String,
    pub permutation: [usize; 3],
    pub witness_cells: Vec<(usize, usize, usize)>,
    pub max_row_weight: usize,
    pub sandwich: Option<SandwichResult>,
}

#[derive(Serialize)]
pub struct SandwichResult {
    pub d: usize,
    pub lower: String,
    pub upper: String,
    pub holds: bool,
}

#[derive(Serialize)]
pub struct CssResult {
    pub original_n: usize,
    pub n: usize,
    pub k: usize,
    pub dual_containment: bool,
    pub max_weight_ratio_ok: bool,
    pub distance: Option<CssDistanceResult>,
    pub written_files: Vec<String>,
}

#[derive(Serialize)]
pub struct CssDistanceResult {
    pub cap: usize,
    pub dx: Option<usize>,
    pub dz: Option<usize>,
    pub d: Option<usize>,
    pub budget_exhausted: bool,
}

#[derive(Serialize)]
pub struct BarrierResult {
    pub n1: usize,
    pub n2: usize,
    pub n3: usize,
    pub path_len: usize,
    pub max_syndrome_weight: usize,
    pub endpoint_is_two_slice_logical: bool,
    pub endpoint_is_nonstabilizer: bool,
    pub syndrome_profile: Vec<usize>,
}

#[derive(Serialize)]
pub struct FractalResult {
    pub moduli: (usize, usize, usize),
    pub p: u32,
    pub axes: (usize, usize),
    pub operator_weight: usize,
    pub image_weight: usize,
    pub image_weight_bound: usize,
    pub bound_holds: bool,
    pub phi_kernel_dimension: Option<usize>,
}
