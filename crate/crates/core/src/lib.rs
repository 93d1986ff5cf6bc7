//! Exact-arithmetic chain complexes over ℤ, ℚ and prime fields: homotopy
//! kernels and cokernels, fibre–cofibre sequences, homotopical homology of
//! h-differential sequences, and decision procedures for every flavour of
//! homotopical exactness, all by exact linear-algebra lifting.

pub mod ring;
pub mod matrix;
pub mod snf;
pub mod module;
pub mod complex;
pub mod constructions;
pub mod solver;

pub use complex::{homology, ChainComplex, ChainMap, Diagnostic, Homotopy, TwoHomotopy};
pub use constructions::{
    canonical_stability, coherent_c, coherent_k, factor_through_hcok, factor_through_hker,
    fibre_cofibre_sequence, hcok, hker, omega_homotopy, shift_complex, shift_homotopy, shift_map,
    sigma_homotopy, CoherentSquare, FibreCofibreSequence, HCokernelData, HKernelData,
};
pub use matrix::Matrix;
pub use module::{
    is_exact_at, lift_through, module_cokernel, module_inverse, module_is_iso, module_kernel,
    module_pullback, module_pushout, InvariantFactors, ModuleMap, PresentedModule,
};
pub use ring::{Ring, Scalar};
pub use solver::{
    adjointify, find_nullhomotopy, find_two_homotopy, homotopy_equivalence_witness,
    is_contractible, AdjointEquivalence, EquivalenceWitness,
};
pub use snf::{kernel_basis, smith_normal_form, solve_matrix_equation, SmithDecomposition};
