//! Exact invariants: matching number, clique number, Tutte–Berge witnesses
//! and the Gallai–Edmonds partition.

mod clique;
mod matching;
mod tutte_berge;

pub use clique::{clique_number, find_clique_in, is_k_clique_free, MAX_CLIQUE_VERTICES};
pub use matching::{
    matching_number, matching_number_oracle, Matching, MAX_MATCHING_ORACLE_VERTICES,
};
pub use tutte_berge::{
    gallai_edmonds, tutte_berge_max_deficiency, GallaiEdmonds, TutteBergeWitness,
    MAX_GALLAI_EDMONDS_VERTICES, MAX_TUTTE_BERGE_VERTICES,
};
