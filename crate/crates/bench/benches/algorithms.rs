use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use eqgraph_core::graph::{circumference, clique_number, hamiltonian_cycle, is_planar};
use eqgraph_core::group::named_subgroup;
use eqgraph_core::verifier::{default_catalog, parse_claim_selector, sweep, CheckOptions};
use eqgraph_core::{enhanced_power_graph, enhanced_quotient_graph, make_group};

fn graphs(c: &mut Criterion) {
    let g = make_group("dihedral:6 x cyclic:2").unwrap();
    let power = enhanced_power_graph(&g);
    let h = named_subgroup(&g, None, "center").unwrap();
    let quotient = enhanced_quotient_graph(&g, &h).unwrap();

    c.bench_function("enhanced_power_graph D12xZ2", |b| b.iter(|| enhanced_power_graph(black_box(&g))));
    c.bench_function("clique_number G(D12xZ2)", |b| b.iter(|| clique_number(black_box(&power), 40)));
    c.bench_function("is_planar G(D12xZ2)", |b| b.iter(|| is_planar(black_box(&power), 30)));
    c.bench_function("hamiltonian_cycle G_Z(D12xZ2)", |b| b.iter(|| hamiltonian_cycle(black_box(&quotient), 24)));
    let deleted = enhanced_power_graph(&make_group("cyclic:15").unwrap()).deleted().unwrap();
    c.bench_function("circumference G*(Z15)", |b| b.iter(|| circumference(black_box(&deleted), 14)));
}

fn sweeps(c: &mut Criterion) {
    let catalog = default_catalog(12).unwrap();
    let claims = parse_claim_selector("all").unwrap();
    c.bench_function("sweep all claims, order <= 12", |b| {
        b.iter(|| sweep(black_box(&catalog), &claims, 1, CheckOptions::default()))
    });
}

criterion_group!(benches, graphs, sweeps);
criterion_main!(benches);
