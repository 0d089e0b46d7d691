//! Plain step-by-step battle simulation, independent of the production engine.

use ewd_core::{Budget, BudgetExceeded, Worm};

/// Every worm `A_0, A_1, …` of the battle, computed with [`Worm::step_down`].
pub fn battle_worms(a: &Worm, budget: &Budget) -> Result<Vec<Worm>, BudgetExceeded> {
    let mut out = vec![a.clone()];
    let mut stored = a.len() as u64;
    let mut k = 0u64;
    while !out.last().expect("nonempty").is_top() {
        k += 1;
        if k > budget.max_steps {
            return Err(BudgetExceeded::steps(budget.max_steps));
        }
        let next = out.last().expect("nonempty").step_down(k);
        stored += next.len() as u64;
        if stored > budget.max_term_size {
            return Err(BudgetExceeded::term_size(budget.max_term_size));
        }
        out.push(next);
    }
    Ok(out)
}

/// `h_A(m)` by plain simulation.
pub fn hardy_worm(a: &Worm, m: u64, budget: &Budget) -> Result<u64, BudgetExceeded> {
    let mut cur = a.step_down(m);
    let mut k = 0u64;
    while !cur.is_top() {
        k += 1;
        if k > budget.max_steps {
            return Err(BudgetExceeded::steps(budget.max_steps));
        }
        cur = cur.step_down(m + k);
        budget.check_size(cur.len() as u64)?;
    }
    Ok(k)
}
