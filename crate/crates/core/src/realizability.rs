//! Which profiles (f, d, k) exist on n vertices, and witnesses for the
//! ones that do.
//!
//! `feasible` answers by closed-form case analysis (valid for n >= 8;
//! below that the exhaustive census is the authority). `construct_witness`
//! builds an actual graph for every feasible query and re-measures it
//! before returning, so a wrong branch can never escape quietly. Every
//! witness carries a replayable recipe.

use crate::analysis::{analyze, DeltaTriple};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::recipe::{RecipeBuilder, WitnessRecipe};

/// Is there a connected non-complete graph on n vertices with exactly
/// f free vertices, diameter d, and connectivity k?
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Query {
    pub n: usize,
    pub f: usize,
    pub d: usize,
    pub k: usize,
}

impl Query {
    pub fn new(n: usize, f: usize, d: usize, k: usize) -> Self {
        Query { n, f, d, k }
    }

    pub fn delta(&self) -> DeltaTriple {
        DeltaTriple::new(self.f, self.d, self.k)
    }
}

impl std::fmt::Display for Query {
    fn fmt(&self, fm: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            fm,
            "n={} (f,d,k)=({},{},{})",
            self.n, self.f, self.d, self.k
        )
    }
}

/// Which case of the characterization decided a query.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Clause {
    /// f + d + k exceeds n + 2.
    IneqFail,
    /// (0, 2, 1) needs nine vertices; at n = 8 it does not exist.
    Phi3SmallN,
    K1F0,
    K1F1,
    K1F2Plus,
    D2F0,
    D2F1,
    D2F2Plus,
    /// d >= 3, k >= 2: decided by n >= k(d-1) + max(2, f).
    MainBound,
    /// d <= 1 or k = 0: only complete or disconnected graphs qualify,
    /// and both are outside the universe.
    CompleteExcluded,
}

impl std::fmt::Display for Clause {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let name = match self {
            Clause::IneqFail => "INEQ_FAIL",
            Clause::Phi3SmallN => "PHI3_SMALL_N",
            Clause::K1F0 => "K1_F0",
            Clause::K1F1 => "K1_F1",
            Clause::K1F2Plus => "K1_F2PLUS",
            Clause::D2F0 => "D2_F0",
            Clause::D2F1 => "D2_F1",
            Clause::D2F2Plus => "D2_F2PLUS",
            Clause::MainBound => "MAIN_BOUND",
            Clause::CompleteExcluded => "COMPLETE_EXCLUDED",
        };
        f.write_str(name)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct FeasibilityVerdict {
    pub feasible: bool,
    pub clause: Clause,
    /// The binding bound of the deciding clause, where one exists:
    /// an upper limit on d, k, f+d, f+k, or phi, or the vertex demand
    /// k(d-1) + max(2, f).
    pub bound_detail: Option<usize>,
}

impl FeasibilityVerdict {
    fn new(feasible: bool, clause: Clause, bound_detail: Option<usize>) -> Self {
        FeasibilityVerdict {
            feasible,
            clause,
            bound_detail,
        }
    }
}

/// The universal constraint f + d <= n + 2 - k, phrased as a profile
/// sum cap. Holds for every connected non-complete graph.
pub fn inequality_bound_holds(q: Query) -> bool {
    q.f + q.d + q.k <= q.n + 2
}

/// Closed-form feasibility for n >= 8.
pub fn feasible(q: Query) -> Result<FeasibilityVerdict> {
    let Query { n, f, d, k } = q;
    if n < 8 {
        return Err(Error::OutOfTheoremRange { n });
    }
    if d < 2 || k == 0 {
        // d <= 1 forces a complete graph, k = 0 a disconnected one.
        return Ok(FeasibilityVerdict::new(
            false,
            Clause::CompleteExcluded,
            None,
        ));
    }
    let verdict = if k == 1 {
        match f {
            0 => {
                if d == 2 && n == 8 {
                    FeasibilityVerdict::new(false, Clause::Phi3SmallN, Some(9))
                } else {
                    FeasibilityVerdict::new(d <= n - 3, Clause::K1F0, Some(n - 3))
                }
            }
            1 => FeasibilityVerdict::new(d <= n - 2, Clause::K1F1, Some(n - 2)),
            _ => FeasibilityVerdict::new(f + d <= n + 1, Clause::K1F2Plus, Some(n + 1)),
        }
    } else if d == 2 {
        match f {
            0 => FeasibilityVerdict::new(k <= n - 2, Clause::D2F0, Some(n - 2)),
            1 => FeasibilityVerdict::new(k <= n - 3, Clause::D2F1, Some(n - 3)),
            _ => FeasibilityVerdict::new(f + k <= n, Clause::D2F2Plus, Some(n)),
        }
    } else if f + d + k > n + 2 {
        FeasibilityVerdict::new(false, Clause::IneqFail, Some(n + 2))
    } else {
        let demand = k * (d - 1) + f.max(2);
        FeasibilityVerdict::new(n >= demand, Clause::MainBound, Some(demand))
    };
    Ok(verdict)
}

/// Cut-vertex witnesses (k = 1).
fn build_cut_vertex(n: usize, f: usize, d: usize) -> Result<RecipeBuilder> {
    match (f, d) {
        // A dominating vertex over two disjoint squares-or-longer
        // cycles: no free vertex, diameter 2, the apex cuts. Needs
        // n >= 9 so both cycles reach length four.
        (0, 2) => {
            let mut b = RecipeBuilder::new("apex-two-cycles");
            b.cycle(4)?;
            b.cycle(n - 5)?;
            b.disjoint_union()?;
            b.complete(1)?;
            b.join()?;
            Ok(b)
        }
        // Apex over a cycle and a three-path, with one apex edge cut
        // so the path's middle drifts to distance three.
        (0, 3) => {
            let mut b = RecipeBuilder::new("apex-cycle-tail-cut");
            b.cycle(n - 4)?;
            b.path(3)?;
            b.disjoint_union()?;
            b.complete(1)?;
            b.join()?;
            b.remove_edge(n - 3, n - 1)?;
            Ok(b)
        }
        // Path with both ends thickened: the extra copies pin the
        // leaves' freeness away without shortening the path.
        (0, _) => {
            let mut b = RecipeBuilder::new("path-thick-ends");
            b.path(d + 1)?;
            b.duplicate_vertex(1, 1)?;
            b.duplicate_vertex(d - 1, n - d - 2)?;
            Ok(b)
        }
        // Apex over a long cycle plus one pendant: the pendant is the
        // single free vertex.
        (1, 2) => {
            let mut b = RecipeBuilder::new("apex-cycle-pendant");
            b.cycle(n - 2)?;
            b.complete(1)?;
            b.disjoint_union()?;
            b.complete(1)?;
            b.join()?;
            Ok(b)
        }
        // Path with a fan of copies at the neck; only the far leaf
        // stays free.
        (1, _) => {
            let mut b = RecipeBuilder::new("path-fan-neck");
            b.path(d + 1)?;
            b.duplicate_vertex(1, n - d - 1)?;
            Ok(b)
        }
        // Apex over a cycle plus one edge: the edge's ends are the two
        // free vertices.
        (2, 2) => {
            let mut b = RecipeBuilder::new("apex-cycle-edge");
            b.cycle(n - 3)?;
            b.complete(2)?;
            b.disjoint_union()?;
            b.complete(1)?;
            b.join()?;
            Ok(b)
        }
        // Star with a chain threaded through some leaves; chain ends
        // and untouched leaves are free: f total, diameter 2.
        (_, 2) => {
            let mut b = RecipeBuilder::new("star-leaf-chain");
            b.complete_bipartite(1, n - 1)?;
            for j in 1..=(n - f) {
                b.add_edge(j, j + 1)?;
            }
            Ok(b)
        }
        // f >= 2, d >= 3: path surgeries keyed by how much room
        // n leaves beyond f + d.
        _ => {
            if f + d == n + 1 {
                let mut b = RecipeBuilder::new("path-tip-split");
                b.path(d + 1)?;
                b.duplicate_vertex(d, f - 2)?;
                Ok(b)
            } else if f + d == n {
                let mut b = RecipeBuilder::new("path-tip-loop");
                b.path(d + 1)?;
                b.duplicate_vertex(1, 1)?;
                b.add_edge(1, d + 1)?;
                b.duplicate_vertex(d, f - 2)?;
                Ok(b)
            } else if f + d == n - 1 {
                let mut b = RecipeBuilder::new("path-tip-split-neck");
                b.path(d + 1)?;
                b.duplicate_vertex(d, f - 1)?;
                b.duplicate_vertex(1, 1)?;
                Ok(b)
            } else {
                // Room to spare: close a triangle at the far end, copy
                // its top for the free supply, pad at the neck.
                let mut b = RecipeBuilder::new("path-tip-triangle");
                b.path(d + 1)?;
                b.complete(1)?;
                b.disjoint_union()?;
                b.add_edge(d - 1, d + 1)?;
                b.add_edge(d, d + 1)?;
                b.duplicate_vertex(d + 1, f - 1)?;
                b.duplicate_vertex(1, n - d - f - 1)?;
                Ok(b)
            }
        }
    }
}

/// Diameter-two witnesses (k >= 2): joins of a clique with small
/// graphs, minus a few cross edges to tune the free count and keep the
/// diameter at two.
fn build_diameter_two(n: usize, f: usize, k: usize) -> Result<RecipeBuilder> {
    let removals: &[(usize, usize)];
    let mut b;
    match f {
        0 if k == 2 => {
            b = RecipeBuilder::new("two-hubs");
            b.complete_bipartite(2, n - 2)?;
            removals = &[];
        }
        0 if k <= n - 5 => {
            b = RecipeBuilder::new("clique-two-strands");
            b.complete(k)?;
            b.path(n - k - 2)?;
            b.path(2)?;
            b.disjoint_union()?;
            b.join()?;
            return finish_removing(b, &[(0, k + 1), (1, n - 4), (0, n - 2), (1, n - 1)]);
        }
        0 if k == n - 4 => {
            b = RecipeBuilder::new("clique-two-edges");
            b.complete(n - 4)?;
            b.path(2)?;
            b.path(2)?;
            b.disjoint_union()?;
            b.join()?;
            return finish_removing(b, &[(0, n - 4), (1, n - 3), (0, n - 2), (1, n - 1)]);
        }
        0 if k == n - 3 => {
            b = RecipeBuilder::new("clique-strand");
            b.complete(n - 3)?;
            b.path(3)?;
            b.join()?;
            return finish_removing(b, &[(0, n - 3), (1, n - 2), (2, n - 1)]);
        }
        0 => {
            // k = n - 2, the largest connectivity a non-complete graph
            // allows.
            b = RecipeBuilder::new("clique-edge");
            b.complete(n - 2)?;
            b.path(2)?;
            b.join()?;
            return finish_removing(b, &[(0, n - 2), (1, n - 1)]);
        }
        1 if k == 2 => {
            // Two hubs over an independent block, plus a corner square
            // whose top is the free vertex.
            b = RecipeBuilder::new("hub-corner-square");
            b.complete_bipartite(2, n - 4)?;
            b.complete(1)?;
            b.disjoint_union()?;
            b.complete(1)?;
            b.disjoint_union()?;
            b.add_edge(0, n - 2)?;
            b.add_edge(0, n - 1)?;
            b.add_edge(1, n - 1)?;
            b.add_edge(n - 2, n - 1)?;
            removals = &[];
        }
        1 if k <= n - 4 => {
            b = RecipeBuilder::new("clique-strand-pendant");
            b.complete(k)?;
            b.path(n - k - 1)?;
            b.complete(1)?;
            b.disjoint_union()?;
            b.join()?;
            return finish_removing(b, &[(0, k + 1), (1, n - 3)]);
        }
        1 => {
            // k = n - 3.
            b = RecipeBuilder::new("clique-edge-pendant");
            b.complete(n - 3)?;
            b.path(2)?;
            b.complete(1)?;
            b.disjoint_union()?;
            b.join()?;
            return finish_removing(b, &[(0, n - 3), (1, n - 2)]);
        }
        2 if k <= n - 4 => {
            b = RecipeBuilder::new("clique-strands-open");
            b.complete(k)?;
            b.path(n - k - 2)?;
            b.path(2)?;
            b.disjoint_union()?;
            b.join()?;
            return finish_removing(b, &[(0, n - 2), (1, n - 1)]);
        }
        2 if k == n - 3 => {
            b = RecipeBuilder::new("clique-strand-tips");
            b.complete(n - 3)?;
            b.path(3)?;
            b.join()?;
            return finish_removing(b, &[(n - 3, n - 2), (0, n - 1)]);
        }
        2 => {
            // k = n - 2: clique joined with two loose vertices, both free.
            b = RecipeBuilder::new("clique-two-tips");
            b.complete(n - 2)?;
            b.complete(1)?;
            b.complete(1)?;
            b.disjoint_union()?;
            b.join()?;
            removals = &[];
        }
        _ => {
            // f >= 3: clique joined with a cycle, then a run of f - 1
            // consecutive cycle edges cut; the stranded stretch is free.
            b = RecipeBuilder::new("clique-broken-ring");
            b.cycle(n - k)?;
            b.complete(k)?;
            b.join()?;
            for j in 0..f - 1 {
                b.remove_edge(j, j + 1)?;
            }
            removals = &[];
        }
    }
    for &(u, v) in removals {
        b.remove_edge(u, v)?;
    }
    Ok(b)
}

fn finish_removing(mut b: RecipeBuilder, removals: &[(usize, usize)]) -> Result<RecipeBuilder> {
    for &(u, v) in removals {
        b.remove_edge(u, v)?;
    }
    Ok(b)
}

/// Two strands of d-1 vertices between two hubs: hub a holds the
/// strand heads, hub b the tails. The bare frame is the 2d-cycle.
fn theta_base(b: &mut RecipeBuilder, d: usize) -> Result<()> {
    b.path(d - 1)?;
    b.path(d - 1)?;
    b.disjoint_union()?;
    b.complete(1)?;
    b.disjoint_union()?;
    b.complete(1)?;
    b.disjoint_union()?;
    let a = 2 * (d - 1);
    let hub_b = a + 1;
    b.add_edge(0, a)?;
    b.add_edge(d - 1, a)?;
    b.add_edge(d - 2, hub_b)?;
    b.add_edge(2 * (d - 1) - 1, hub_b)?;
    Ok(())
}

/// Witnesses for k = 2, d >= 3: the two-strand frame, padded by
/// copying the first strand head, with hub neighborhoods closed into
/// cliques to mint free vertices on demand.
fn build_theta(n: usize, f: usize, d: usize) -> Result<RecipeBuilder> {
    let frame = 2 * (d - 1) + 2;
    let a = 2 * (d - 1);
    let hub_b = a + 1;
    match f {
        0 => {
            let mut b = RecipeBuilder::new("theta");
            theta_base(&mut b, d)?;
            b.duplicate_vertex(0, n - frame)?;
            Ok(b)
        }
        1 => {
            let mut b = RecipeBuilder::new("theta-far-clique");
            theta_base(&mut b, d)?;
            b.duplicate_vertex(0, n - frame)?;
            b.clique_neighborhood(hub_b)?;
            Ok(b)
        }
        2 => {
            let mut b = RecipeBuilder::new("theta-both-cliques");
            theta_base(&mut b, d)?;
            b.duplicate_vertex(0, n - frame)?;
            b.clique_neighborhood(a)?;
            b.clique_neighborhood(hub_b)?;
            Ok(b)
        }
        _ => {
            // A rider on the second strand's first edge supplies the
            // third and later free vertices.
            let mut b = RecipeBuilder::new("theta-gadget");
            theta_base(&mut b, d)?;
            b.complete(1)?;
            b.disjoint_union()?;
            let c = frame;
            b.add_edge(d - 1, c)?;
            b.add_edge(d, c)?;
            b.duplicate_vertex(c, f - 3)?;
            b.duplicate_vertex(0, n - 2 * (d - 1) - f)?;
            b.clique_neighborhood(a)?;
            b.clique_neighborhood(hub_b)?;
            Ok(b)
        }
    }
}

/// Thick path on k(d-1) + 2 vertices: the interior of P_{d+1} blown up
/// into independent layers of size k with consecutive layers fully
/// joined. Duplicating interior vertices in ascending order builds
/// exactly that, because each batch copies everything the previous
/// layer has accumulated.
fn layered_base(b: &mut RecipeBuilder, k: usize, d: usize) -> Result<()> {
    b.path(d + 1)?;
    for i in 1..d {
        b.duplicate_vertex(i, k - 1)?;
    }
    Ok(())
}

/// Witnesses for k >= 3, d >= 3. Every vertex must keep degree >= k,
/// so free vertices are grown next to the far hub's layer once that
/// layer is a clique; padding copies the first layer's pattern.
fn build_layered(n: usize, f: usize, d: usize, k: usize) -> Result<RecipeBuilder> {
    let frame = k * (d - 1) + 2;
    let hub_b = d; // far end of the original path
    match f {
        0 => {
            let mut b = RecipeBuilder::new("layers");
            layered_base(&mut b, k, d)?;
            b.duplicate_vertex(1, n - frame)?;
            Ok(b)
        }
        1 => {
            let mut b = RecipeBuilder::new("layers-far-clique");
            layered_base(&mut b, k, d)?;
            b.duplicate_vertex(1, n - frame)?;
            b.clique_neighborhood(hub_b)?;
            Ok(b)
        }
        2 => {
            let mut b = RecipeBuilder::new("layers-both-cliques");
            layered_base(&mut b, k, d)?;
            b.duplicate_vertex(1, n - frame)?;
            b.clique_neighborhood(0)?;
            b.clique_neighborhood(hub_b)?;
            Ok(b)
        }
        _ => {
            let mut b = RecipeBuilder::new("layers-free-tips");
            layered_base(&mut b, k, d)?;
            b.duplicate_vertex(1, n - frame - (f - 2))?;
            b.clique_neighborhood(0)?;
            b.clique_neighborhood(hub_b)?;
            b.duplicate_vertex(hub_b, f - 2)?;
            Ok(b)
        }
    }
}

fn build_recipe(q: Query) -> Result<(Graph, WitnessRecipe)> {
    let Query { n, f, d, k } = q;
    let builder = if k == 1 {
        build_cut_vertex(n, f, d)?
    } else if d == 2 {
        build_diameter_two(n, f, k)?
    } else if k == 2 {
        build_theta(n, f, d)?
    } else {
        build_layered(n, f, d, k)?
    };
    let built = builder.top().clone();
    Ok((built, builder.finish()))
}

/// Build a witness for a feasible query and verify it measures exactly
/// (f, d, k) before handing it out.
pub fn construct_witness(q: Query) -> Result<(Graph, WitnessRecipe)> {
    let verdict = feasible(q)?;
    if !verdict.feasible {
        return Err(Error::NotRealizable {
            clause: verdict.clause,
        });
    }
    let (built, recipe) = build_recipe(q)?;
    let g = recipe.replay()?;
    debug_assert_eq!(g, built, "recipe replay diverged for {q}");
    debug_assert_eq!(g.order(), q.n, "witness order drifted for {q}");
    let report = analyze(&g)?;
    let want = q.delta();
    if report.delta != want || report.complete {
        return Err(Error::ConstructionMismatch {
            expected: want,
            got: report.delta,
        });
    }
    Ok((g, recipe))
}

/// All feasible profiles with sum i on n vertices, each with its
/// verified witness. Ascending by (f, d).
pub fn witnesses_for_phi(n: usize, i: usize) -> Result<Vec<(Query, Graph, WitnessRecipe)>> {
    if n < 8 {
        return Err(Error::OutOfTheoremRange { n });
    }
    if !(3..=n + 2).contains(&i) {
        return Err(Error::NotRealizable {
            clause: Clause::IneqFail,
        });
    }
    let mut out = Vec::new();
    for f in 0..=i - 3 {
        for d in 2..i - f {
            let k = i - f - d;
            let q = Query::new(n, f, d, k);
            if feasible(q)?.feasible {
                let (g, recipe) = construct_witness(q)?;
                out.push((q, g, recipe));
            }
        }
    }
    Ok(out)
}

/// Outcome of running the whole query grid for one n.
#[derive(Clone, Debug)]
pub struct SweepReport {
    pub n: usize,
    pub feasible_count: usize,
    pub verified: usize,
    /// Queries whose witness measured a different profile.
    pub mismatches: Vec<(Query, DeltaTriple)>,
}

/// Construct and verify a witness for every feasible query at n.
pub fn soundness_sweep(n: usize) -> Result<SweepReport> {
    let mut report = SweepReport {
        n,
        feasible_count: 0,
        verified: 0,
        mismatches: Vec::new(),
    };
    for f in 0..=n {
        for d in 2..n {
            for k in 1..=n - 2 {
                let q = Query::new(n, f, d, k);
                if !feasible(q)?.feasible {
                    continue;
                }
                report.feasible_count += 1;
                match construct_witness(q) {
                    Ok(_) => report.verified += 1,
                    Err(Error::ConstructionMismatch { got, .. }) => {
                        report.mismatches.push((q, got))
                    }
                    Err(e) => return Err(e),
                }
            }
        }
    }
    Ok(report)
}
