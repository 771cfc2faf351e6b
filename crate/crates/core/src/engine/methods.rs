//! Independence-polynomial methods behind a common trait, looked up by name.

use crate::engine::formula::{ccp_poly_convolution, recipe_poly};
use crate::engine::{independence_poly_brute, independence_poly_with, EngineConfig};
use crate::error::{Error, Result};
use crate::poly::IntPoly;
use crate::products::{Instance, ProductRecipe};

pub trait IndependenceMethod: Send + Sync {
    fn name(&self) -> &'static str;

    fn description(&self) -> &'static str;

    /// Whether the method can run on this input at all.
    fn applies_to(&self, input: &Instance) -> bool {
        let _ = input;
        true
    }

    fn compute(&self, input: &Instance, cfg: &EngineConfig) -> Result<IntPoly>;
}

pub struct Branching;

impl IndependenceMethod for Branching {
    fn name(&self) -> &'static str {
        "branch"
    }

    fn description(&self) -> &'static str {
        "memoized vertex branching with component splitting"
    }

    fn compute(&self, input: &Instance, cfg: &EngineConfig) -> Result<IntPoly> {
        independence_poly_with(&input.graph, cfg)
    }
}

pub struct Brute;

impl IndependenceMethod for Brute {
    fn name(&self) -> &'static str {
        "brute"
    }

    fn description(&self) -> &'static str {
        "exhaustive subset enumeration (bounded)"
    }

    fn compute(&self, input: &Instance, cfg: &EngineConfig) -> Result<IntPoly> {
        independence_poly_brute(&input.graph, cfg)
    }
}

fn need_recipe(input: &Instance) -> Result<&ProductRecipe> {
    input
        .recipe
        .as_ref()
        .ok_or_else(|| Error::Parameter("input carries no product structure".into()))
}

/// Closed-form evaluation of a clique or cycle cover product.
pub struct Formula;

impl IndependenceMethod for Formula {
    fn name(&self) -> &'static str {
        "formula"
    }

    fn description(&self) -> &'static str {
        "closed-form product formula from the operands' polynomials"
    }

    fn applies_to(&self, input: &Instance) -> bool {
        input.recipe.is_some()
    }

    fn compute(&self, input: &Instance, cfg: &EngineConfig) -> Result<IntPoly> {
        recipe_poly(need_recipe(input)?, cfg)
    }
}

/// Coefficient-level two-stage count for clique cover products.
pub struct Convolution;

impl IndependenceMethod for Convolution {
    fn name(&self) -> &'static str {
        "convolution"
    }

    fn description(&self) -> &'static str {
        "slot-by-slot coefficient convolution for clique cover products"
    }

    fn applies_to(&self, input: &Instance) -> bool {
        matches!(input.recipe, Some(ProductRecipe::CliqueCover { .. }))
    }

    fn compute(&self, input: &Instance, cfg: &EngineConfig) -> Result<IntPoly> {
        match need_recipe(input)? {
            ProductRecipe::CliqueCover { base, cover, fiber, attach } => {
                cover.validate(base)?;
                let ig = independence_poly_with(base, cfg)?;
                let ih = independence_poly_with(fiber, cfg)?;
                let ihu = independence_poly_with(&fiber.delete_vertices(attach)?, cfg)?;
                ccp_poly_convolution(&ig, &ih, &ihu, cover.len())
            }
            ProductRecipe::CycleCover { .. } => {
                Err(Error::Parameter("convolution evaluates clique cover products only".into()))
            }
        }
    }
}

pub struct MethodRegistry {
    methods: Vec<Box<dyn IndependenceMethod>>,
}

impl Default for MethodRegistry {
    fn default() -> Self {
        let mut reg = MethodRegistry { methods: Vec::new() };
        reg.register(Box::new(Branching));
        reg.register(Box::new(Brute));
        reg.register(Box::new(Formula));
        reg.register(Box::new(Convolution));
        reg
    }
}

impl MethodRegistry {
    pub fn register(&mut self, method: Box<dyn IndependenceMethod>) {
        self.methods.retain(|m| m.name() != method.name());
        self.methods.push(method);
    }

    /// `auto` resolves to branching.
    pub fn get(&self, name: &str) -> Result<&dyn IndependenceMethod> {
        let name = if name == "auto" { "branch" } else { name };
        self.methods
            .iter()
            .find(|m| m.name() == name)
            .map(|m| m.as_ref())
            .ok_or_else(|| Error::Unknown { kind: "method", name: name.to_string() })
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.methods.iter().map(|m| m.name()).collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = &dyn IndependenceMethod> {
        self.methods.iter().map(|m| m.as_ref())
    }
}
