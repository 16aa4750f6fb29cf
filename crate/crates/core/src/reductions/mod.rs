//! Hardness constructions as instance transformers, each with a
//! certificate that [`verify_reduction`] can audit.

mod builders;
mod certificate;
mod gadget;

pub use builders::{
    build_3p1_instance, build_3reg_case1, build_3reg_case2, build_4reg_instance, build_butterfly_safe,
    build_girth_lift, build_pendant_clique, build_pendant_precolour,
};
pub use certificate::{
    digest, three_colouring_seed, verify_reduction, verify_reduction_with_budget, Claim, Construction,
    CopyMode, CopyRecord, Outcome, ReductionCertificate, VerificationReport, DEFAULT_VERIFY_BUDGET,
};
pub use gadget::{
    make_gadget, minimize_counterexample, pick_edge, CounterexamplePair, GadgetSpec, SyntheticGadget,
};

#[cfg(test)]
mod tests;
