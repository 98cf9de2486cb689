//! Ring contexts: the ambient graded polynomial algebra F_p[t_1..t_l].

use std::sync::Arc;

use super::monomial::MonomialOrder;
use crate::algebra::field::is_prime;

/// The ambient ring data: prime, variable names, Chow-degree weights, and the
/// monomial order.  Immutable after construction and shared by reference;
/// two contexts are compatible when they are structurally equal.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RingContext {
    prime: u32,
    vars: Vec<String>,
    weights: Vec<u32>,
    order: MonomialOrder,
}

pub type Ctx = Arc<RingContext>;

impl RingContext {
    pub fn new(prime: u32, vars: Vec<String>, weights: Vec<u32>) -> Ctx {
        assert!(is_prime(prime), "modulus {prime} is not prime");
        assert!(prime <= 1 << 31, "modulus too large");
        assert_eq!(vars.len(), weights.len());
        assert!(weights.iter().all(|&w| w > 0), "weights must be positive");
        Arc::new(RingContext {
            prime,
            vars,
            weights,
            order: MonomialOrder::GrevLex,
        })
    }

    /// Weight-1 context with variables `t1..tl`, the shape of every flag
    /// catalog ring.
    pub fn flag(prime: u32, nvars: usize) -> Ctx {
        RingContext::new(
            prime,
            (1..=nvars).map(|i| format!("t{i}")).collect(),
            vec![1; nvars],
        )
    }

    /// Mod-2 weight-1 context `F_2[z, x1..xh]`, home of the Dickson expansion
    /// and the Milnor derivations.
    pub fn q_context(h: usize) -> Ctx {
        let mut vars = vec!["z".to_string()];
        vars.extend((1..=h).map(|i| format!("x{i}")));
        RingContext::new(2, vars, vec![1; h + 1])
    }

    pub fn prime(&self) -> u32 {
        self.prime
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn var_name(&self, i: usize) -> &str {
        &self.vars[i]
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn is_weight_one(&self) -> bool {
        self.weights.iter().all(|&w| w == 1)
    }
}

/// Structural compatibility check used by every binary polynomial operation.
pub fn same_context(a: &Ctx, b: &Ctx) -> bool {
    Arc::ptr_eq(a, b) || a == b
}
