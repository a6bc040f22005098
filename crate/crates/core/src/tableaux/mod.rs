//! Flamingo shapes, standard and rectangular tableaux, `r`-weakly noncrossing
//! set partitions, and the bijections between them.
//!
//! The chain is `SYT(d^r, 1^(n-rd)) → T(n, d, r) → WNC(n, d, r)`: `syt_to_rect`
//! strips the tail (repairing row `r` when needed), and `rect_to_wnc` matches
//! consecutive rows with the Catalan bijection, hanging each missing element
//! under the innermost arc between rows `r - 1` and `r`.

mod mdiagram;
mod partition;
mod rect;
mod shape;
mod syt;

pub use mdiagram::{arcs_noncrossing, wnc_to_mdiagram, Arc, MDiagram};
pub use partition::{
    all_set_partitions, arcs_cross, enumerate_wnc, enumerate_wnc_filtered, is_r_weakly_noncrossing, is_wnc,
    rect_to_wnc, wnc_key_sets, wnc_to_rect, OrderedSetPartition, SetPartition,
};
pub use rect::{enumerate_rect, rect_to_syt, syt_to_rect, RectTableau};
pub use shape::{count_syt, hook_lengths, FlamingoShape};
pub use syt::{enumerate_syt, StandardYoungTableau};
