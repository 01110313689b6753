//! Binarized multilayer perceptron with tunably-quantum inference.
//!
//! The crate trains a partially binarized MLP classically with a
//! straight-through estimator, then runs inference by sampling
//! measurement-style stochastic activations whose randomness is controlled
//! by a quantumness parameter `a` (`a = 0` reproduces the deterministic
//! classical network). Layer circuits can be emitted as OpenQASM 2.0 and
//! executed against a pluggable backend; a Monte-Carlo trajectory simulator
//! with configurable noise channels provides the local backend.

pub mod circuit;
pub mod data;
pub mod inference;
pub mod net;
pub mod rng;
pub mod sim;
