//! Exhaustive extremal-energy searches and the statements they verify.

mod conjecture;
mod exact;
mod search;
mod theorems;

pub use conjecture::{conjecture_evidence, ConjectureEvidence, Verdict, ROUTE_TOLERANCE};
pub use exact::{certify, ExactEnergy};
pub use search::{
    evaluate, search, search_filtered, search_members, search_members_with_tolerance, search_with_tolerance, Basis,
    Direction, Evaluated, ExtremalReport, MemberCertificate, TIE_TOLERANCE,
};
pub use theorems::{
    lookup, matching_forests, relation, verify, Claim, Expected, Params, TheoremEntry, VerificationResult, REGISTRY,
    VALUE_TOLERANCE,
};
