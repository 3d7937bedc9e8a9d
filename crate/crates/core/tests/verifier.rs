use eqgraph_core::verifier::{
    check_instance, default_catalog, parse_claim_selector, recheck, sweep, CheckOptions, ClaimId, GroupContext, Verdict,
};
use eqgraph_core::Subgroup;

fn claim(s: &str) -> ClaimId {
    s.parse().unwrap()
}

#[test]
fn failing_verdicts_recheck_and_carry_witnesses() {
    let catalog = default_catalog(16).unwrap();
    let options = CheckOptions::default();
    let all = parse_claim_selector("all").unwrap();
    let mut fails = 0;
    for entry in &catalog {
        let ctx = GroupContext::new(entry.spec.clone(), entry.group.clone());
        for h in &entry.subgroups {
            for v in check_instance(&ctx, h, &all, options) {
                match v.verdict {
                    Verdict::Fails => {
                        fails += 1;
                        let w = v.witness.as_ref().expect("fails carries a witness");
                        assert!(recheck(v.claim, &ctx, h, w, options), "{} {} {:?}", v.claim, entry.spec, h.members());
                    }
                    Verdict::Skipped | Verdict::Inapplicable => assert!(v.note.is_some() && v.witness.is_none()),
                    Verdict::Holds => assert!(v.witness.is_none()),
                }
            }
        }
    }
    assert!(fails > 0);
}

#[test]
fn edge_correspondence_implies_connectivity() {
    let report = sweep(&default_catalog(24).unwrap(), &[claim("C01"), claim("C04")], 1, CheckOptions::default());
    let verdicts = &report.verdicts;
    for v in verdicts {
        if v.claim == claim("C04") && v.verdict == Verdict::Holds {
            let c01 = verdicts
                .iter()
                .find(|w| w.claim == claim("C01") && w.group == v.group && w.subgroup == v.subgroup)
                .unwrap();
            assert_eq!(c01.verdict, Verdict::Holds, "{} {:?}", v.group, v.subgroup);
        }
    }
}

#[test]
fn eulerian_criterion_holds_for_trivial_subgroup() {
    let options = CheckOptions::default();
    for entry in default_catalog(24).unwrap().into_iter().filter(|e| e.group.order() > 1) {
        let ctx = GroupContext::new(entry.spec.clone(), entry.group.clone());
        let v = check_instance(&ctx, &Subgroup::trivial(), &[claim("C14")], options).remove(0);
        assert_eq!(v.verdict, Verdict::Holds, "{}", entry.spec);
    }
}

#[test]
fn catalog_subgroups_are_proper_and_normal() {
    for entry in default_catalog(24).unwrap() {
        assert_eq!(entry.subgroups.is_empty(), entry.group.order() == 1);
        for h in &entry.subgroups {
            assert!(h.order() < entry.group.order() && entry.group.order() % h.order() == 0);
            for x in entry.group.elements() {
                for &a in h.members() {
                    let conj = entry.group.mul(entry.group.mul(x, a), entry.group.inv(x));
                    assert!(h.contains(conj));
                }
            }
        }
    }
}

#[test]
fn sweeps_are_deterministic() {
    let catalog = default_catalog(12).unwrap();
    let claims = parse_claim_selector("all").unwrap();
    let a = sweep(&catalog, &claims, 1, CheckOptions::default()).to_jsonl(false);
    let b = sweep(&catalog, &claims, 3, CheckOptions::default()).to_jsonl(false);
    assert_eq!(a, b);
}

#[test]
fn small_catalog_eulerian_failure_is_reported() {
    let report = sweep(&default_catalog(8).unwrap(), &[claim("C14")], 2, CheckOptions::default());
    let failure = report
        .verdicts
        .iter()
        .find(|v| v.verdict == Verdict::Fails && v.group == "cyclic:4")
        .expect("C14 fails on cyclic:4");
    assert_eq!(failure.subgroup, [0, 2]);
    assert!(!report.must_pass_failed());
}
