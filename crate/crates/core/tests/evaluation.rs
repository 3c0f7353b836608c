//! Evaluation against independent 40-digit reference values.

use besselprod::analysis::{direct_value, evaluate};
use besselprod::scalar::{parse_rational, rel_err};
use besselprod::{generate, BigComplex, GaussRat, Mode, Params, Scalar};

fn point(re: &str, im: &str) -> Scalar {
    let g = GaussRat::new(parse_rational(re).unwrap(), parse_rational(im).unwrap());
    Scalar::Float(BigComplex::from_gauss(&g, 128))
}

fn check(family: &str, nu: &str, p: &str, theta: Option<&str>, z: Scalar, want: Scalar) {
    let params = Params::parse(nu, p, theta, Mode::float(128)).unwrap();
    let f = family.parse().unwrap();
    let seq = generate(f, &params, 60).unwrap();
    let value = evaluate(&seq, &z).unwrap().value;
    let direct = direct_value(f, &params, &z, 80).unwrap();
    // The references carry 35 significant digits.
    assert!(rel_err(&value, &want) < 1e-33, "{family}: series {value} vs {want}");
    assert!(rel_err(&direct, &want) < 1e-33, "{family}: direct {direct} vs {want}");
}

#[test]
fn power_j_reference() {
    check("power-J", "1/3", "2", Some("1/2"), point("1/4", "0"), point("0.42368431530199063064467779807730397", "0"));
}

#[test]
fn exp_j_reference() {
    check("exp-J", "0", "1", None, point("1/2", "0"), point("1.5472751331077773743087645789562843", "0"));
}

#[test]
fn sin_i_complex_order_reference() {
    let want = point("0.27887362011404644749928326494699361", "0.16600127217966019570854468815011746");
    check("sin_via_exp-I", "1/3+1/5i", "3/4-1/2i", None, point("1/3", "1/2"), want.clone());
    check("sin-I", "1/3+1/5i", "3/4-1/2i", None, point("1/3", "1/2"), want);
}

#[test]
fn arccos_j_reference() {
    let want = point("-0.00027714289190337047935233349668401869", "-0.018359674113593993733815209212110445");
    check("arccos-J", "5/3", "1/2", None, point("1/10", "-3/20"), want);
}

#[test]
fn exp_arctan_i_reference() {
    let want = point("0.000054725808660610808468439146231674904", "-0.011432105298624051259094246498939141");
    check("exp_arctan-I", "5/3", "1/2", None, point("1/10", "-3/20"), want);
}
