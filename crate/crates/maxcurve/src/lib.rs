//! Computational toolkit for the Kummer covers of the Suzuki and Ree curves:
//! finite field arithmetic, rational point counts, the automorphism group
//! action at q = 8, ramification data and the catalog of quotient genera.

pub mod cli;
pub mod curve_models;
pub mod genus_catalog;
pub mod gf;
pub mod group_action;
pub mod point_count;
pub mod ramification;
