//! Independence polynomials of graph products.
//!
//! Graphs ([`graph`]), integer polynomials ([`poly`], [`sturm`]), clique and
//! cycle cover products ([`products`]), exact independence polynomial
//! engines ([`engine`]), coefficient-sequence properties ([`properties`]),
//! named families ([`families`]) and randomized verification campaigns
//! ([`harness`]).

pub mod engine;
pub mod error;
pub mod families;
pub mod graph;
pub mod harness;
pub mod poly;
pub mod products;
pub mod properties;
pub mod sturm;

pub use engine::{independence_number, independence_poly, EngineConfig};
pub use error::{DivisionError, Error, Result};
pub use graph::{Graph, GraphJson, VertexSet};
pub use poly::IntPoly;
pub use products::{CliqueCover, CycleCover, CyclePart, Instance, ProductRecipe};
pub use properties::{analyze, PropertyReport};
pub use harness::{run_campaign, CampaignParams, CampaignRegistry, TrialReport};
pub use families::FamilyRegistry;
