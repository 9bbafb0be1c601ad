//! Finite structures given by Cayley tables.

pub mod magma;
pub mod mapping;
pub mod ring;
pub mod table;

pub use magma::{
    are_isomorphic, classify_magma, is_isomorphism, is_subgroup, solve_in_group, subgroups, Group,
    StructureReport,
};
pub use mapping::{classify_map, FiniteMap, MapKind};
pub use ring::{characteristic, find_total_order, residue_ring, ring_classify, RingReport};
pub use table::{parse_ring, parse_table, render_ring, CayleyTable, TableParseError};
