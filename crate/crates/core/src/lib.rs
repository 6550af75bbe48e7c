//! Closed-form observables of two-path chordal SLE and the critical Ising
//! model, and the Monte Carlo machinery used to check them.
//!
//! * [`specfun`]: Gamma, `2F1`, elliptic `K`, quadrature.
//! * [`observables`]: partition functions, crossing probabilities, the
//!   SLE/Brownian-excursion avoidance probability, ODE/PDE residuals.
//! * [`loewner`]: chordal SLE traces from the Loewner equation.
//! * [`excursion`]: Brownian excursions and path intersection tests.
//! * [`ising`]: Swendsen-Wang sampling of Ising rectangles with
//!   Dobrushin-type boundary arcs.
//! * [`harness`]: statistics, seeds, configs, CSV, experiment commands.

pub mod excursion;
pub mod harness;
pub mod ising;
pub mod loewner;
pub mod mobius;
pub mod observables;
pub mod specfun;
