use super::{Hypotheses, IdentityDescriptor, Slot, Tier};

use Slot::{XHalf, YHalf, V, X, X0, Y, Y0, YA0};
use Tier::{Extended, Mandatory};

const NONE: Hypotheses = Hypotheses::NONE;

const fn not(values: &'static [&'static str]) -> Hypotheses {
    Hypotheses { lambda_not: values, ..Hypotheses::NONE }
}

const ONE: Hypotheses = Hypotheses { lambda_one: true, ..Hypotheses::NONE };
const ONE_CHAR: Hypotheses = Hypotheses { lambda_one: true, char_not_3: true, ..Hypotheses::NONE };
const ONE_B0: Hypotheses = Hypotheses { lambda_one: true, b0_zero: true, ..Hypotheses::NONE };

const fn id(
    id: &'static str,
    family: &'static str,
    tier: Tier,
    slots: &'static [Slot],
    hypotheses: Hypotheses,
    text: &'static str,
) -> IdentityDescriptor {
    IdentityDescriptor { id, family, tier, slots, hypotheses, text }
}

const Q: &str = "Q_a(b) = 0 expanded";
const SERESS: &str = "associativity of a with Fa + A0";
const P: &str = "P_a(x,y) = 0 expanded";
const L120: &str = "P_b on A1/2 x A0";
const L012: &str = "P_b on A0 x A1/2";
const L1212: &str = "P_b on A1/2 x A1/2, first form";
const P1: &str = "P_b expanded through b = λa + b0 + bh";
const PA0: &str = "P_b with one argument a";
const SI: &str = "multiplication by b0 and bh";
const P00: &str = "P_b on A0 x A0";
const P120: &str = "P_b on A1/2 x A0, second form";
const SSI: &str = "forms and products on A1/2 x A1/2";
const P1212: &str = "P_b on A1/2 x A1/2, second form";
const QP: &str = "P_a and Q_a at a";
const DER1: &str = "[L_a, L_v] for v in A1/2";
const DER2: &str = "Leibniz rule of [L_a, L_v] on A x A0, A1/2 part";
const DER3: &str = "Leibniz rule of [L_a, L_v] on A x A0, A0 part";
const DER4: &str = "Leibniz rule of [L_a, L_v] on A x A1/2, A1/2 part";
const DER5: &str = "Leibniz rule of [L_a, L_v] on A x A1/2, A0 part";
const T0012: &str = "bh as a derivation on A0 x A0";
const T121212: &str = "bh on A1/2 x A1/2";
const T120: &str = "bh on A1/2 x A0";
const AB: &str = "(a,b) = 1";

pub static CATALOG: &[IdentityDescriptor] = &[
    // b itself
    id("Q.1", Q, Extended, &[X], NONE,
        "0 = L a x + L <b,x> a b - 2 L a (b x) + b0 x + <b,x> b b0 - 2 (b x) b0 + bh x + <b,x> b bh - 2 (b x) bh"),
    id("Q.2", Q, Extended, &[], NONE, "(bh bh)_0 = L (b0 b0 + (bh bh)_0)"),
    id("Q.3a", Q, Mandatory, &[], NONE, "<bh,bh> = <b,bh> = 2 L (1 - L)"),
    id("Q.3b", Q, Mandatory, &[], NONE, "<b,b0> = (1 - L)(1 - L)"),
    id("Q.3c", Q, Mandatory, &[], NONE, "b0 b0 = (1 - L) b0 ; (bh bh)_0 = L b0"),
    id("Q.3d", Q, Mandatory, &[], NONE, "bh bh = L (1 - L) a + L b0"),
    id("Q.3e", Q, Mandatory, &[], NONE, "bh b0 = 1/2 (1 - L) bh"),
    id("Q.4", Q, Mandatory, &[X0], NONE, "2 (bh (bh x0))_0 = x0 b0 + <b,x0> b0 - 2 (x0 b0) b0"),
    id("Q.5a", Q, Mandatory, &[XHalf], NONE,
        "(1 - L)(bh xh)_0 - 2 (bh xh)_0 b0 + <b,xh> b0 - 2 (bh (xh b0))_0 = 0"),
    id("Q.5b", Q, Mandatory, &[XHalf], NONE,
        "1/2 L (1 - L) xh - 2 (bh xh)_0 bh + 1/2 <b,xh> bh - 2 (xh b0) b0 + (1 - 2 L)(xh b0) = 0"),
    id("SERESS", SERESS, Mandatory, &[X, YA0], NONE, "a (x y) = (a x) y"),
    // P_a
    id("P.1", P, Mandatory, &[X, Y], NONE, "a (x y) - 2 a ((a y) x) = (a x) y - 2 (a x)(a y)"),
    id("P.2", P, Extended, &[X, Y], NONE,
        "L (1 - L) a (x y) + b0 (x y) + bh (x y) - 2 (L b0 ((a y) x) + L bh ((a y) x)) \
         - 2 (L a ((b0 y) x) + b0 ((b0 y) x) + bh ((b0 y) x) + L a ((bh y) x) + b0 ((bh y) x) + bh ((bh y) x)) \
         = L (1 - L)(a x) y + (b0 x) y + (bh x) y - 2 (L (a x)(b0 y) + L (a x)(bh y)) \
         - 2 (L (b0 x)(a y) + (b0 x)(b0 y) + (b0 x)(bh y)) - 2 (L (bh x)(a y) + (bh x)(b0 y) + (bh x)(bh y))"),
    id("P.3", P, Mandatory, &[X0], NONE, "(1 - L) bh x0 - 2 bh (x0 b0) + 2 (bh x0) b0 = 0"),
    id("P.4a", P, Mandatory, &[YHalf], NONE,
        "1/2 L (1 - L) yh - 2 bh (yh bh)_0 + 1/2 <b,yh> bh + 2 (yh b0) b0 - yh b0 = 0"),
    id("P.4b", P, Mandatory, &[XHalf], NONE, "(xh b0) b0 = 1/2 (1 - L) xh b0"),
    id("P.4c", P, Mandatory, &[XHalf], NONE,
        "bh (bh xh)_0 = 1/4 L (1 - L) xh - 1/2 L xh b0 + 1/4 <b,xh> bh"),
    id("P.4d", P, Mandatory, &[XHalf], NONE,
        "bh (bh xh) = 1/4 L (1 - L) xh - 1/2 L xh b0 + 1/2 <b,xh> bh"),
    id("P.5a", P, Mandatory, &[XHalf], NONE, "(1 - L)(bh xh)_0 - 2 (bh xh) b0 + 2 (bh (xh b0))_0 = 0"),
    id("P.5b", P, Mandatory, &[XHalf], NONE, "(bh (xh b0))_0 = 1/4 <b,xh> b0"),
    id("P.5c", P, Mandatory, &[XHalf], NONE, "bh (xh b0) = 1/4 (1 - L) <b,xh> a + 1/4 <b,xh> b0"),
    id("P.5d", P, Mandatory, &[XHalf], NONE, "(bh xh) b0 = 1/2 (1 - L)(bh xh)_0 + 1/4 <b,xh> b0"),
    id("P.6", P, Extended, &[X0, Y0], NONE,
        "b0 (x0 y0) + bh (x0 y0) - 2 (b0 ((b0 y0) x0) + bh ((b0 y0) x0) + 1/2 L (bh y0) x0 + b0 ((bh y0) x0) + bh ((bh y0) x0)) \
         = (b0 x0) y0 + (bh x0) y0 - 2 ((b0 x0)(b0 y0) + (b0 x0)(bh y0)) - 2 ((bh x0)(b0 y0) + (bh x0)(bh y0))"),
    id("P.7", P, Mandatory, &[X0, Y0], NONE,
        "bh (x0 y0) + 2 (bh y0)(x0 b0) + 2 (bh x0)(y0 b0) = (bh x0) y0 + 2 bh (x0 (y0 b0)) + L (bh y0) x0 + 2 ((bh y0) x0) b0"),
    id("P.8a", P, Mandatory, &[X0, Y0], NONE,
        "(1 - L)(bh x0) y0 - (1 - L)(bh y0) x0 = 2 bh (y0 (x0 b0)) - 2 bh (x0 (y0 b0)) + 2 ((bh x0) y0) b0 - 2 ((bh y0) x0) b0"),
    id("P.8b", P, Mandatory, &[X0, Y0], NONE,
        "2 bh (x0 y0) + 4 (bh y0)(x0 b0) + 4 (bh x0)(y0 b0) = (1 + L)(bh x0) y0 + (1 + L)(bh y0) x0 \
         + 2 bh ((y0 b0) x0) + 2 bh ((x0 b0) y0) + 2 ((bh y0) x0) b0 + 2 ((bh x0) y0) b0"),
    id("P.9", P, Mandatory, &[X0, Y0], NONE,
        "(x0 y0) b0 + 2 (x0 b0)(y0 b0) + 2 ((bh x0)(bh y0))_0 = y0 (x0 b0) + 2 (x0 (y0 b0)) b0 + 2 (bh ((bh y0) x0))_0"),
    id("P.10a", P, Mandatory, &[X0, Y0], NONE,
        "2 (bh ((bh x0) y0))_0 - 2 (bh ((bh y0) x0))_0 = y0 (x0 b0) + 2 (x0 (y0 b0)) b0 - x0 (y0 b0) - 2 (y0 (x0 b0)) b0"),
    id("P.10b", P, Mandatory, &[X0, Y0], NONE,
        "4 (x0 b0)(y0 b0) + 4 ((bh x0)(bh y0))_0 - y0 (x0 b0) - x0 (y0 b0) + (x0 y0) b0 \
         = 2 (x0 (y0 b0)) b0 + 2 (y0 (x0 b0)) b0 + 2 (bh ((bh y0) x0))_0 + 2 (bh ((bh x0) y0))_0 - (x0 y0) b0"),
    // P_b on eigenvectors of a
    id("L120.1", L120, Mandatory, &[XHalf, Y0], NONE,
        "(xh y0) b0 + bh (xh y0) - 2 ((xh (y0 b0)) b0 + bh (xh (y0 b0)) + L a ((bh y0) xh) + (xh (bh y0)) b0 + bh (xh (bh y0))) \
         = (xh b0) y0 + (bh xh) y0 - L xh (bh y0) - 2 ((xh b0)(y0 b0) + (xh b0)(bh y0)) - 2 ((bh xh)(y0 b0) + (bh xh)(bh y0))"),
    id("L120.2", L120, Mandatory, &[XHalf, Y0], NONE,
        "(xh y0) b0 - 2 (xh (y0 b0)) b0 - 2 bh (xh (bh y0)) = (xh b0) y0 - 2 (xh b0)(y0 b0) - 2 (bh xh)(bh y0)"),
    id("L120.3", L120, Mandatory, &[XHalf, Y0], NONE,
        "bh (xh y0) + L (bh y0) xh - (bh xh) y0 + 2 (xh b0)(bh y0) + 2 (bh xh)(y0 b0) \
         - 2 bh (xh (y0 b0)) - 2 L a (xh (bh y0)) - 2 ((bh y0) xh) b0 = 0"),
    id("L012.1", L012, Mandatory, &[X0, YHalf], NONE,
        "1/2 L (1 - L) yh x0 + (1 - L)(yh x0) b0 + (1 - L) bh (yh x0) - L (yh b0) x0 - 2 ((yh b0) x0) b0 \
         - 2 bh ((yh b0) x0) - 2 ((bh yh) x0) b0 - 2 bh ((bh yh) x0) \
         = (1 - L) yh (x0 b0) + (1 - L) yh (bh x0) - 2 (yh b0)(b0 x0) - 2 (bh yh)(b0 x0) - 2 (bh x0)(yh b0) - 2 (bh x0)(bh yh)"),
    id("L012.2", L012, Mandatory, &[X0, YHalf], NONE,
        "1/2 L (1 - L) yh x0 + (1 - L)(yh x0) b0 - L (yh b0) x0 - 2 ((yh b0) x0) b0 - 2 bh ((bh yh) x0) \
         = (1 - L) yh (x0 b0) - 2 (yh b0)(b0 x0) - 2 (bh x0)(bh yh)"),
    id("L012.3", L012, Mandatory, &[X0, YHalf], NONE,
        "(1 - L) bh (yh x0) - (1 - L)(bh x0) yh + 2 (bh x0)(yh b0) + 2 (bh yh)(x0 b0) - 2 ((bh yh) x0) b0 - 2 bh ((yh b0) x0) = 0"),
    id("L1212.1", L1212, Mandatory, &[XHalf, YHalf], NONE,
        "1/2 L (1 - L) <xh,yh> a + (1 - L)(xh yh) b0 + (1 - L) bh (xh yh) - L <xh, yh b0> a - 2 (xh (yh b0)) b0 \
         - 2 bh (xh (yh b0)) - 2 ((bh yh) xh) b0 - 2 bh ((bh yh) xh) \
         = 1/2 L (1 - L) xh yh + (1 - L) yh (xh b0) + (1 - L)(bh xh) yh - L xh (yh b0) - 2 (xh b0)(yh b0) \
         - 2 (bh yh)(xh b0) - 2 (bh xh)(yh b0) - 2 (bh xh)(bh yh)"),
    id("L1212.2", L1212, Mandatory, &[XHalf, YHalf], NONE,
        "(1 - L) bh (xh yh) + 2 (bh yh)(xh b0) + 2 (bh xh)(yh b0) = (1 - L)(bh xh) yh + 2 bh (xh (yh b0)) + 2 ((bh yh) xh) b0"),
    id("L1212.3", L1212, Mandatory, &[XHalf, YHalf], NONE,
        "(1 - L)(bh xh) yh + 2 bh (xh (yh b0)) + 2 ((bh yh) xh) b0 = (1 - L)(bh yh) xh + 2 bh (yh (xh b0)) + 2 ((bh xh) yh) b0 ; \
         2 (1 - L) bh (xh yh) + 4 (bh yh)(xh b0) + 4 (bh xh)(yh b0) = (1 - L)((bh xh) yh + (bh yh) xh) \
         + 2 bh (xh (yh b0)) + 2 bh (yh (xh b0)) + 2 ((bh yh) xh) b0 + 2 ((bh xh) yh) b0 ; \
         (L - 1)((bh xh) yh + (bh yh) xh) + 4 (bh yh)(xh b0) + 4 (bh xh)(yh b0) = 2 (L - 1) bh (xh yh) \
         + 2 bh (xh (yh b0)) + 2 bh (yh (xh b0)) + 2 ((bh yh) xh) b0 + 2 ((bh xh) yh) b0"),
    id("L1212.4", L1212, Mandatory, &[XHalf, YHalf], NONE,
        "(1 - L)(xh yh) b0 - 1/2 L (1 - L)(xh yh)_0 + 2 ((xh b0)(yh b0))_0 + 2 ((bh xh)(bh yh))_0 \
         = (1 - L)(yh (xh b0))_0 - L (xh (yh b0))_0 + 2 (xh (yh b0)) b0 + 2 (bh ((bh yh) xh))_0 ; \
         L (1 - L)(xh yh)_0 - 4 ((xh b0)(yh b0))_0 - 4 ((bh xh)(bh yh))_0 = -2 (1 - L)(yh (xh b0))_0 \
         + 2 L (xh (yh b0))_0 - 4 (xh (yh b0)) b0 - 4 (bh ((bh yh) xh))_0 + 2 (1 - L)(xh yh) b0"),
    id("L1212.5", L1212, Mandatory, &[XHalf, YHalf], NONE,
        "(yh (xh b0))_0 + 2 (xh (yh b0)) b0 + 2 (bh ((bh yh) xh))_0 = (xh (yh b0))_0 + 2 (yh (xh b0)) b0 + 2 (bh ((bh xh) yh))_0"),
    id("L1212.6", L1212, Mandatory, &[XHalf, YHalf], NONE,
        "2 (1 - L)(xh yh) b0 - L (1 - L)(xh yh)_0 + 4 ((xh b0)(yh b0))_0 + 4 ((bh xh)(bh yh))_0 \
         = (1 - 2 L)(yh (xh b0))_0 + (1 - 2 L)(xh (yh b0))_0 + 2 (xh (yh b0)) b0 + 2 (yh (xh b0)) b0 \
         + 2 (bh ((bh yh) xh))_0 + 2 (bh ((bh xh) yh))_0 ; \
         L (L - 1)(xh yh)_0 + (2 L - 1)((yh (xh b0))_0 + (xh (yh b0))_0) + 4 ((xh b0)(yh b0))_0 + 4 ((bh xh)(bh yh))_0 \
         = -2 (1 - L)(xh yh) b0 + 2 (xh (yh b0)) b0 + 2 (yh (xh b0)) b0 + 2 (bh ((bh yh) xh))_0 + 2 (bh ((bh xh) yh))_0"),
    id("L1212.7", L1212, Mandatory, &[XHalf, YHalf], not(&["1"]),
        "((bh xh) yh) b0 + ((bh yh) xh) b0 = 1/2 (<b,yh> xh b0 + <b,xh> yh b0) + 1/4 (1 - L) <a, xh yh> bh - 1/4 <b0, xh yh> bh"),
    id("L1212.8", L1212, Mandatory, &[XHalf, YHalf], not(&["1"]),
        "bh ((xh b0) yh) + (bh yh)(xh b0) = 1/2 <b,yh> xh b0 - 1/4 <b,xh> yh b0 + 1/8 (1 - L) <b,xh> yh + 1/2 <b0, xh yh> bh"),
    id("P1.1", P1, Extended, &[X, Y], NONE,
        "4 (b x)(b y) - (b x) y - (b y) x - <b,y> b x - <b,x> b y - <b, x y> b + b (x y) = 0"),
    id("P1.2", P1, Extended, &[X, Y], NONE,
        "4 (b x)(b y) = 4 L L (a x)(a y) + 4 L (a x)(y b0) + 4 L (a y)(x b0) + 4 L (a x)(y bh) + 4 L (a y)(x bh) \
         + 4 (x b0)(y b0) + 4 (x bh)(y bh) + 4 (x b0)(y bh) + 4 (y b0)(x bh)"),
    id("P1.3", P1, Extended, &[X, Y], NONE,
        "-(b x) y = -L (a x) y - (x b0) y - (x bh) y ; -(b y) x = -L (a y) x - (y b0) x - (y bh) x"),
    id("P1.4", P1, Extended, &[X, Y], NONE,
        "-<b,y> b x = -<b,y> L a x - <b,y> x b0 - <b,y> x bh ; -<b,x> b y = -<b,x> L a y - <b,x> y b0 - <b,x> y bh"),
    id("P1.5", P1, Extended, &[X, Y], NONE,
        "-<b, x y> b + b (x y) = -<b, x y> L a - <b, x y> b0 - <b, x y> bh + L a (x y) + (x y) b0 + (x y) bh"),
    id("PA0.1", PA0, Mandatory, &[X0], NONE, "2 bh (x0 b0) = (1 - L) bh x0 + 1/2 <b,x0> bh"),
    id("PA0.2", PA0, Mandatory, &[X0], NONE, "2 bh (bh x0) = L <b,x0> a + L x0 b0"),
    id("PA0.3", PA0, Mandatory, &[X0], NONE, "2 (x0 b0) b0 = (1 - L) x0 b0 + <b,x0> b0"),
    id("PA0.4", PA0, Mandatory, &[X0], NONE, "(bh x0) b0 = 1/4 <b,x0> bh"),
    id("SI.1", SI, Mandatory, &[XHalf], NONE, "(xh b0) b0 = 1/2 (1 - L) xh b0"),
    id("SI.2", SI, Mandatory, &[X0], NONE, "(x0 b0) b0 = 1/2 (1 - L) x0 b0 + 1/2 <b,x0> b0"),
    id("SI.3", SI, Mandatory, &[X0], NONE, "(x0 bh) bh = 1/2 L <b,x0> a + 1/2 L x0 b0"),
    id("SI.4", SI, Mandatory, &[XHalf], NONE,
        "(xh bh)_0 bh = 1/4 L (1 - L) xh - 1/2 L xh b0 + 1/4 <b,xh> bh ; \
         (xh bh) bh = 1/4 L (1 - L) xh - 1/2 L xh b0 + 1/2 <b,xh> bh"),
    id("SI.5", SI, Mandatory, &[XHalf], NONE, "(xh b0) bh = 1/4 (1 - L) <b,xh> a + 1/4 <b,xh> b0"),
    id("SI.6", SI, Mandatory, &[XHalf], NONE, "(xh bh) b0 = 1/2 (1 - L)(bh xh)_0 + 1/4 <b,xh> b0"),
    id("SI.7", SI, Mandatory, &[X0], NONE, "(x0 b0) bh = 1/2 (1 - L) bh x0 + 1/4 <b,x0> bh"),
    id("SI.8", SI, Mandatory, &[X0], NONE, "(x0 bh) b0 = 1/4 <b,x0> bh"),
    id("P00.1", P00, Mandatory, &[X0, Y0], NONE,
        "0 = 4 (bh y0)(x0 b0) + 4 (bh x0)(y0 b0) - (bh x0) y0 - (bh y0) x0 - <b,y0> bh x0 - <b,x0> bh y0 - <b, x0 y0> bh + bh (x0 y0)"),
    id("P00.2", P00, Mandatory, &[X0, Y0], NONE,
        "bh (x0 y0) - (bh x0) y0 - (bh y0) x0 = -4 (bh y0)(x0 b0) - 4 (bh x0)(y0 b0) + <b,y0> bh x0 + <b,x0> bh y0 + <b, x0 y0> bh"),
    id("P00.3", P00, Mandatory, &[X0, Y0], NONE, "((bh y0) x0) b0 + ((bh x0) y0) b0 = 1/4 <b, x0 y0> bh"),
    id("P00.4", P00, Mandatory, &[X0, Y0], NONE,
        "4 (bh x0)(bh y0) + 4 (x0 b0)(y0 b0) - y0 (x0 b0) - x0 (y0 b0) + (x0 y0) b0 \
         = <b,y0> x0 b0 + <b,x0> y0 b0 + <b, x0 y0> b0 + <b, x0 y0> L a"),
    id("P120.1", P120, Mandatory, &[XHalf, Y0], NONE,
        "0 = (2 L - 1) xh (y0 b0) + 4 (xh b0)(y0 b0) + 4 (xh bh)(bh y0) - (xh b0) y0 - 1/2 <b,y0> L xh \
         - <b,y0> xh b0 - <b,xh> bh y0 - <b, xh y0> bh + (xh y0) b0"),
    id("P120.2", P120, Mandatory, &[XHalf, Y0], NONE,
        "0 = bh (xh y0) + (2 L - 1)(bh y0) xh - (bh xh) y0 + 4 (xh b0)(bh y0) + 4 (bh xh)(y0 b0) \
         - <b,y0> xh bh - <b,xh> y0 b0 - <b, xh y0> L a - <b, xh y0> b0"),
    id("SSI.1", SSI, Mandatory, &[XHalf, YHalf], NONE,
        "(bh (xh yh)) b0 = 1/4 (1 - L) <a, xh yh> bh + 1/4 <b0, xh yh> bh"),
    id("SSI.2", SSI, Mandatory, &[XHalf, YHalf], NONE, "(bh (xh (yh b0))) b0 = 1/4 (1 - L) <b0, xh yh> bh"),
    id("SSI.3", SSI, Mandatory, &[XHalf, YHalf], NONE, "<a, (xh b0) yh> = 1/2 <b0, xh yh>"),
    id("SSI.4", SSI, Mandatory, &[XHalf, YHalf], NONE, "<b0, (xh b0) yh> = 1/2 (1 - L) <b0, xh yh>"),
    id("SSI.5", SSI, Mandatory, &[XHalf, YHalf], NONE, "<a, (xh b0)(yh b0)> = 1/4 (1 - L) <b0, xh yh>"),
    id("SSI.6", SSI, Mandatory, &[XHalf, YHalf], NONE, "<b0, (xh b0)(yh b0)> = 1/4 (1 - L)(1 - L) <b0, xh yh>"),
    id("SSI.7", SSI, Mandatory, &[XHalf, YHalf], NONE, "<b, (xh b0) yh> = 1/2 <b0, xh yh>"),
    id("SSI.8", SSI, Mandatory, &[XHalf, YHalf], NONE, "<b, (xh b0)(yh b0)> = 1/4 (1 - L) <b0, xh yh>"),
    id("SSI.9", SSI, Mandatory, &[XHalf, YHalf], NONE,
        "(bh (xh b0)) yh = 1/8 (1 - L) <b,xh> yh + 1/4 <b,xh> yh b0"),
    id("SSI.10", SSI, Mandatory, &[XHalf, YHalf], NONE, "(bh (xh b0))(yh b0) = 1/4 (1 - L) <b,xh> yh b0"),
    id("P1212.1", P1212, Mandatory, &[XHalf, YHalf], NONE,
        "0 = L (L - 1) xh yh + (2 L - 1) xh (yh b0) + (2 L - 1) yh (xh b0) + 4 (xh b0)(yh b0) + 4 (xh bh)(yh bh) \
         - <b,yh> xh bh - <b,xh> yh bh - <b, xh yh> L a - <b, xh yh> b0 + L a (xh yh) + (xh yh) b0 ; \
         (2 L - 1)(xh (yh b0))_0 + (2 L - 1)(yh (xh b0))_0 - <b,yh>(xh bh)_0 - <b,xh>(yh bh)_0 + (xh yh) b0 - <b, xh yh> b0 \
         = L (1 - L)(xh yh)_0 - 4 ((xh bh)(yh bh))_0 - 4 ((xh b0)(yh b0))_0"),
    id("P1212.2", P1212, Mandatory, &[XHalf, YHalf], NONE,
        "0 = (2 L - 1)((bh xh) yh + (bh yh) xh) + 4 (bh xh)(yh b0) + 4 (bh yh)(xh b0) - 1/2 L (<b,yh> xh + <b,xh> yh) \
         - <b,yh> xh b0 - <b,xh> yh b0 - <b, xh yh> bh + (xh yh) bh ; \
         (2 L - 1)((bh xh) yh + (bh yh) xh) + 4 (bh xh)(yh b0) + 4 (bh yh)(xh b0) \
         = 1/2 L (<b,yh> xh + <b,xh> yh) + <b,yh> xh b0 + <b,xh> yh b0 + <b, xh yh> bh - (xh yh) bh"),
    id("P1212.3", P1212, Mandatory, &[XHalf, YHalf], NONE,
        "-L ((bh xh) yh + (bh yh) xh) + 1/2 L (<b,yh> xh + <b,xh> yh) + <b,yh> xh b0 + <b,xh> yh b0 + <b, xh yh> bh \
         = 2 bh (xh (yh b0)) + 2 bh (yh (xh b0)) + 2 ((bh yh) xh) b0 + 2 ((bh xh) yh) b0 + (2 L - 1) bh (xh yh)"),
    id("P1212.4", P1212, Mandatory, &[XHalf, YHalf], NONE,
        "(<b,yh> xh b0 + <b,xh> yh b0) - 2 (((bh yh) xh) b0 + ((bh xh) yh) b0) \
         = 1/2 <b0, xh yh> bh - 1/2 (1 - L) <a, xh yh> bh = 1/2 <b, xh yh> bh - 1/2 <a, xh yh> bh"),
    id("P1212.5", P1212, Mandatory, &[XHalf, YHalf], NONE,
        "((bh yh)(xh b0)) b0 = 1/4 (1 - L) <b,yh> xh b0 ; \
         ((bh yh)_0 (xh b0)) b0 = 1/4 (1 - L) <b,yh> xh b0 - 1/4 <b,yh> (xh b0) b0 = 1/8 (1 - L) <b,yh> xh b0"),
    id("P1212.6", P1212, Mandatory, &[XHalf, YHalf], NONE,
        "(1 - 2 L) bh (xh yh) - L ((bh xh) yh + (bh yh) xh) + 1/2 L (<b,yh> xh + <b,xh> yh) + 1/2 <b0, xh yh> bh \
         - 1/2 (1 - L) <a, xh yh> bh + <b, xh yh> bh = 2 bh (xh (yh b0)) + 2 bh (yh (xh b0))"),
    id("P1212.7", P1212, Mandatory, &[XHalf, YHalf], NONE,
        "bh ((xh b0)(yh b0)) = 1/4 (1 - L) <b0, xh yh> bh ; ((xh b0)(yh b0)) b0 = 1/4 (1 - L) <b0, xh yh> b0"),
    id("P1212.8", P1212, Mandatory, &[XHalf, YHalf], not(&["0"]),
        "bh (yh (xh b0)) + (bh yh)(xh b0) = 1/2 <b,yh> xh b0 - 1/4 <b,xh> yh b0 + 1/8 (1 - L) <b,xh> yh + 1/2 <b0, xh yh> bh"),
    id("QP.1", QP, Extended, &[], NONE, "P(a, a) = 0 ; Q(a) = 0"),
    id("QP.2", QP, Extended, &[Y], NONE, "P(a, y) = 4 Q(y)"),
    id("EQP00", P, Extended, &[X0, Y0], NONE, "P(x0, y0) = a (x0 y0)"),
    id("EQP120", P, Extended, &[X0, YHalf], NONE, "P(x0, yh) = -1/2 x0 yh + a (x0 yh)"),
    id("EQP1212A", P, Extended, &[XHalf, YHalf], NONE, "P(xh, yh) = -<a, xh yh> a + a (xh yh)"),
    id("LAL0", SERESS, Extended, &[X0, Y], NONE, "comm(a, x0, y) = 0"),
    // derivations
    id("DER1.1", DER1, Mandatory, &[V, X], NONE, "comm(a, v, x) = -2 v (a x) + 1/2 (v x + <v,x> a + <a,x> v)"),
    id("DER1.2", DER1, Mandatory, &[V, X], NONE, "comm(a, v, x) = 1/2 <v,x> a - 1/2 v xh - 1/4 <a,x> v + 1/2 v x0"),
    id("DER1.3", DER1, Mandatory, &[V, X], NONE, "(comm(a, v, x))_0 = -1/2 (v xh)_0"),
    id("DER1.4", DER1, Mandatory, &[V, X], NONE, "(comm(a, v, x))_h = 1/2 v x0 - 1/4 <a,x> v"),
    id("DER1.5", DER1, Mandatory, &[V, X], NONE, "comm(a, v, x0) = 1/2 v x0"),
    id("DER1.6", DER1, Mandatory, &[V, X], NONE, "comm(a, v, xh) = 1/2 <v,xh> a - 1/2 v xh"),
    id("DER2.1", DER2, Extended, &[V, X, Y0], NONE, "(comm(a, v, x y0))_h = 1/2 v (y0 x0)"),
    id("DER2.2", DER2, Extended, &[V, X, Y0], NONE, "(comm(a, v, x) y0)_h = 1/2 (v x0) y0 - 1/4 <a,x> v y0"),
    id("DER2.3", DER2, Extended, &[V, X, Y0], NONE, "(comm(a, v, y0) x)_h = 1/2 (v y0) x0 + 1/4 <a,x> v y0"),
    id("DER2.4", DER2, Mandatory, &[V, X, Y0], NONE,
        "(comm(a, v, x y0))_h - (comm(a, v, x) y0)_h - (comm(a, v, y0) x)_h = 1/2 (v (x0 y0) - (v x0) y0 - (v y0) x0)"),
    id("DER3.1", DER3, Extended, &[V, X, Y0], NONE, "(comm(a, v, x y0))_0 = -1/2 (v (xh y0))_0"),
    id("DER3.2", DER3, Extended, &[V, X, Y0], NONE, "(comm(a, v, y0) x)_0 = 1/2 ((v y0) xh)_0"),
    id("DER3.3", DER3, Extended, &[V, X, Y0], NONE, "(comm(a, v, x) y0)_0 = -1/2 (v xh) y0"),
    id("DER3.4", DER3, Mandatory, &[V, X, Y0], NONE,
        "(comm(a, v, x y0))_0 - (comm(a, v, x))_0 y0 - (comm(a, v, y0) x)_0 = -1/2 ((v (xh y0))_0 - (v xh) y0 + ((v y0) xh)_0)"),
    id("DER4.1", DER4, Extended, &[V, X, YHalf], NONE, "(comm(a, v, x yh))_h = 1/2 v (xh yh) - 1/2 <a, xh yh> v"),
    id("DER4.2", DER4, Extended, &[V, X, YHalf], NONE, "(comm(a, v, x) yh)_h = 1/4 <v,x> yh - 1/2 (v xh) yh"),
    id("DER4.3", DER4, Extended, &[V, X, YHalf], NONE, "(comm(a, v, yh) x)_h = 1/4 <v,yh> xh - 1/2 (v yh) xh"),
    id("DER4.4", DER4, Mandatory, &[V, X, YHalf], NONE,
        "(comm(a, v, x yh))_h - (comm(a, v, x) yh)_h - (comm(a, v, yh) x)_h \
         = 1/2 (v (xh yh) + (v xh) yh + (v yh) xh - 1/2 <v,x> yh - 1/2 <v,yh> xh - <a, xh yh> v)"),
    id("DER5.1", DER5, Extended, &[V, X, YHalf], NONE, "(comm(a, v, x yh))_0 = -1/4 <a,x>(v yh)_0 - 1/2 (v (x0 yh))_0"),
    id("DER5.2", DER5, Extended, &[V, X, YHalf], NONE, "(comm(a, v, x) yh)_0 = 1/2 ((v x0) yh)_0 - 1/4 <a,x>(v yh)_0"),
    id("DER5.3", DER5, Extended, &[V, X, YHalf], NONE, "(comm(a, v, yh) x)_0 = -1/2 (v yh) x0"),
    id("DER5.4", DER5, Mandatory, &[V, X, YHalf], NONE,
        "(comm(a, v, x yh))_0 - (comm(a, v, x) yh)_0 - (comm(a, v, yh) x)_0 = -1/2 ((v (yh x0))_0 - (v yh) x0 + ((v x0) yh)_0)"),
    // bh on A0 x A0
    id("EQ0012A", T0012, Mandatory, &[X0, Y0], NONE,
        "2 L ((bh x0) y0 + (bh y0) x0 - bh (x0 y0)) + <b,x0> bh y0 + 4 ((bh x0) y0) b0 - 4 (bh x0)(y0 b0) = 0"),
    id("T0012", T0012, Mandatory, &[X0, Y0], not(&["1/4"]), "bh (x0 y0) = (bh x0) y0 + x0 (bh y0)"),
    // bh on A1/2 x A1/2
    id("LEM121212.1", T121212, Mandatory, &[X0, YHalf], not(&["1/4"]),
        "(1 - L)(yh x0) b0 - 2 ((yh b0) x0) b0 = (1 - L) yh (x0 b0) - 2 (yh b0)(b0 x0)"),
    id("LEM121212.2", T121212, Mandatory, &[XHalf, YHalf], not(&["1", "1/4"]),
        "((bh xh) yh) b0 + (yh b0)(bh xh) = 1/2 (1 - L)(bh xh) yh - 1/8 (1 - L) <b,xh> yh + 3/4 <b,xh> yh b0"),
    id("LEM121212.3", T121212, Mandatory, &[XHalf, YHalf], not(&["1", "1/4"]),
        "(yh b0)(bh xh) + (xh b0)(bh yh) = 1/2 (1 - L)(bh xh) yh + 1/2 (1 - L)(bh yh) xh - 1/8 (1 - L) <b,xh> yh \
         - 1/8 (1 - L) <b,yh> xh + 1/4 (<b,yh> xh b0 + <b,xh> yh b0) + 1/4 <b, xh yh> bh - 1/4 <a, xh yh> bh"),
    id("T121212", T121212, Mandatory, &[XHalf, YHalf], not(&["1", "1/4"]),
        "bh (xh yh) + (bh xh) yh + (bh yh) xh = 1/2 <b,yh> xh + 1/2 <b,xh> yh + <a, xh yh> bh"),
    // bh on A1/2 x A0
    id("IMP.PROP", T120, Mandatory, &[XHalf, Y0], NONE,
        "(bh (xh y0))_0 - (bh xh) y0 + ((bh y0) xh)_0 = 2 (bh (xh y0) - (bh xh) y0 + (bh y0) xh) b0 \
         + 2 (bh (xh (y0 b0)))_0 - 2 (bh ((xh b0) y0))_0 - 1/2 <b, xh y0> b0"),
    id("EQ120A", T120, Extended, &[XHalf, Y0], NONE,
        "(1 - L) bh (xh y0) - (1 - L)(bh y0) xh + 2 (bh y0)(xh b0) + 2 (bh xh)(y0 b0) - 2 ((bh xh) y0) b0 - 2 bh ((xh b0) y0) = 0"),
    id("EQ120B", T120, Extended, &[XHalf, Y0], NONE,
        "bh (xh y0) + L (bh y0) xh - (bh xh) y0 + 2 (xh b0)(bh y0) + 2 (bh xh)(y0 b0) - 2 bh (xh (y0 b0)) \
         - 2 L a (xh (bh y0)) - 2 ((bh y0) xh) b0 = 0"),
    id("EQ120C", T120, Extended, &[XHalf, Y0], NONE,
        "0 = bh (xh y0) + (2 L - 1)(bh y0) xh - (bh xh) y0 + 4 (xh b0)(bh y0) + 4 (bh xh)(y0 b0) \
         - <b,y0> xh bh - <b,xh> y0 b0 - <b, xh y0> L a - <b, xh y0> b0"),
    id("EQ2X", T120, Mandatory, &[XHalf, Y0], NONE,
        "(bh (xh y0))_0 + ((bh y0) xh)_0 - (bh xh) y0 = 4 (bh (xh (y0 b0)))_0 + 4 ((bh y0) xh) b0 \
         - <b,y0>(bh xh)_0 - <b,xh> y0 b0 - <b, xh y0> b0"),
    id("PROP120A.1", T120, Mandatory, &[XHalf, Y0], NONE,
        "1/2 (1 - L)((bh (xh y0))_0 + ((bh y0) xh)_0 - (bh xh) y0) = (bh (xh (y0 b0)))_0 + ((bh (y0 b0)) xh)_0 - (bh xh)(y0 b0)"),
    id("PROP120A.2", T120, Mandatory, &[XHalf, Y0], NONE,
        "(bh (xh (y0 b0)))_0 - (bh xh)(y0 b0) = 1/2 (1 - L)((bh (xh y0))_0 - (bh xh) y0) - 1/4 <b,y0>(bh xh)_0"),
    id("IMPORTANT.1", T120, Mandatory, &[XHalf, Y0], NONE,
        "(bh ((xh b0) y0))_0 + ((bh y0)(xh b0))_0 - 1/4 <b,xh> y0 b0 = 0"),
    id("IMPORTANT.2", T120, Mandatory, &[XHalf, Y0], NONE,
        "(bh ((xh b0)(y0 b0)))_0 = -1/2 (1 - L)((bh y0)(xh b0))_0 + 1/8 (1 - L) <b,xh> y0 b0 + 1/16 <b,y0> <b,xh> b0 \
         = 1/2 (1 - L)(bh ((xh b0) y0))_0 + 1/16 <b,y0> <b,xh> b0"),
    id("IMPORTANT.3", T120, Mandatory, &[XHalf, Y0], not(&["1/4", "1"]),
        "(bh (xh (y0 b0)))_0 = -((bh y0)(xh b0))_0 + 1/4 <b,xh> y0 b0 + 1/4 <b, xh y0> b0 \
         = (bh ((xh b0) y0))_0 + 1/4 <b, xh y0> b0"),
    id("COR120.1", T120, Mandatory, &[XHalf, Y0], NONE,
        "(2 L - 1)((bh (xh y0))_0 - (bh xh) y0 + ((bh y0) xh)_0) - 4 (bh ((xh b0) y0))_0 + 4 (bh (xh (y0 b0)))_0 - <b, xh y0> b0 = 0"),
    id("COR120.2", T120, Mandatory, &[XHalf, Y0], not(&["1/4", "1"]),
        "(2 L - 1)((bh (xh y0))_0 - (bh xh) y0 + ((bh y0) xh)_0) = 0"),
    id("COR120A", T120, Mandatory, &[XHalf, Y0], NONE,
        "((bh y0)(xh b0))_0 b0 = 1/2 (1 - L)((bh y0)(xh b0))_0 + 1/16 <b,xh> <b,y0> b0"),
    id("PROP120B.1", T120, Mandatory, &[XHalf, Y0], NONE,
        "L ((bh (xh y0))_0 - (bh xh) y0 + ((bh y0) xh)_0) + 2 ((xh b0)(bh y0))_0 - 2 ((bh y0) xh) b0 + 1/2 <b,y0>(bh xh)_0 = 0"),
    id("PROP120B.2", T120, Mandatory, &[XHalf, Y0], not(&["0"]),
        "((bh (xh y0))_0 - (bh xh) y0 + ((bh y0) xh)_0) b0 = 1/2 (1 - L)((bh (xh y0))_0 - (bh xh) y0 + ((bh y0) xh)_0)"),
    id("T120", T120, Mandatory, &[XHalf, Y0], not(&["1", "1/4"]),
        "(bh (xh y0))_0 - (bh xh) y0 + ((bh y0) xh)_0 = 0"),
    // (a,b) = 1
    id("AB12.EQSI.1", AB, Mandatory, &[XHalf], ONE, "(xh b0) b0 = 0"),
    id("AB12.EQSI.2", AB, Mandatory, &[X0], ONE, "(x0 b0) b0 = 1/2 <b,x0> b0"),
    id("AB12.EQSI.3", AB, Mandatory, &[X0], ONE, "bh (bh x0) = 1/2 <b,x0> a + 1/2 x0 b0"),
    id("AB12.EQSI.4", AB, Mandatory, &[XHalf], ONE,
        "bh (bh xh) = -1/2 xh b0 + 1/2 <b,xh> bh ; bh (bh xh)_0 = -1/2 xh b0 + 1/4 <b,xh> bh"),
    id("AB12.EQSI.5", AB, Mandatory, &[XHalf], ONE, "bh (xh b0) = (bh xh) b0 = 1/4 <b,xh> b0"),
    id("AB12.EQSI.6", AB, Mandatory, &[X0], ONE, "bh (x0 b0) = 1/4 <b,x0> bh"),
    id("AB12.EQSI.7", AB, Mandatory, &[XHalf, Y], ONE, "<b0, (xh b0) y> = 0 = <bh, y b0>"),
    id("AB12.EQSI.8", AB, Mandatory, &[], ONE, "bh b0 = b0 b0 = 0 ; bh bh = b0"),
    id("LEMAB11.1", AB, Mandatory, &[XHalf, YHalf], ONE,
        "(bh yh)(xh b0) = 1/2 <b,yh> xh b0 - 1/4 <b,xh> yh b0 + 1/2 <b0, xh yh> bh - bh (yh (xh b0))"),
    id("LEMAB11.2", AB, Mandatory, &[XHalf, YHalf], ONE,
        "4 (bh yh)(xh b0) + 4 (bh xh)(yh b0) = <b,yh> xh b0 + <b,xh> yh b0 + 4 <b0, xh yh> bh \
         - 4 bh (yh (xh b0)) - 4 bh (xh (yh b0))"),
    id("LEMAB11.3", AB, Mandatory, &[XHalf, YHalf], ONE, "((bh yh)(xh b0)) b0 = 0"),
    id("LEMAB11.4", AB, Mandatory, &[XHalf, YHalf], ONE,
        "((bh xh) yh) b0 + ((bh yh) xh) b0 = 1/2 (<b,yh> xh b0 + <b,xh> yh b0) - 1/4 <b0, xh yh> bh"),
    id("LEMAB11.5", AB, Mandatory, &[XHalf, YHalf], ONE,
        "4 (bh yh)(xh b0) + 4 (bh xh)(yh b0) = <b,yh> xh b0 + <b,xh> yh b0 - 1/2 <b0, xh yh> bh \
         + 2 bh (xh (yh b0)) + 2 bh (yh (xh b0))"),
    id("LEMAB11.6", AB, Mandatory, &[XHalf, YHalf], ONE,
        "6 (bh (yh (xh b0)) + bh (xh (yh b0))) = 9/2 <b0, xh yh> bh"),
    id("CLAIM1.1", AB, Mandatory, &[XHalf, Y0], ONE,
        "((bh y0)(xh b0))_0 + 2 (xh bh)(y0 b0) = 3/4 <b,y0>(xh bh)_0 + 1/2 <b,xh> y0 b0 - (xh (bh y0)) b0 + 1/2 <b, xh y0> b0"),
    id("CLAIM1.2", AB, Mandatory, &[XHalf, YHalf], ONE,
        "((xh b0)(yh b0))_0 + ((xh b0) yh) b0 - 1/2 <b0, xh yh> b0 = 0"),
    id("CLAIM1.3", AB, Mandatory, &[XHalf, Y0], ONE, "((xh b0)(bh y0)) b0 = 1/16 <b,xh> <b,y0> b0"),
    id("CLAIM1.4", AB, Mandatory, &[XHalf, Y0], ONE,
        "(bh (xh (y0 b0)))_0 + 1/4 <b,y0>(bh xh)_0 - (bh xh)(y0 b0) = 0"),
    id("CLAIM1.5", AB, Mandatory, &[XHalf, Y0], ONE,
        "(bh (xh y0))_0 + ((bh y0) xh)_0 - (bh xh) y0 + 2 ((xh b0)(bh y0))_0 + 1/2 <b,y0>(bh xh)_0 - 2 ((bh y0) xh) b0 = 0"),
    id("CLAIM1.6", AB, Mandatory, &[XHalf, Y0], ONE,
        "(bh ((xh b0) y0))_0 + ((bh y0)(xh b0))_0 - 1/4 <b,xh> y0 b0 = 0"),
    id("CLAIM1.7i", AB, Mandatory, &[XHalf, Y0], ONE,
        "((bh (xh y0))_0 + ((bh y0) xh)_0 - (bh xh) y0) b0 = 1/4 <b, xh y0> b0 + ((bh y0) xh) b0 - ((bh xh) y0) b0 = 0"),
    id("CLAIM1.7ii", AB, Mandatory, &[XHalf, Y0], ONE,
        "(bh (xh y0))_0 - (bh xh) y0 + ((bh y0) xh)_0 = 2 (bh (xh (y0 b0)))_0 - 2 (bh ((xh b0) y0))_0 - 1/2 <b, xh y0> b0"),
    id("CLAIM1.7iii", AB, Mandatory, &[XHalf, Y0], ONE,
        "((bh y0) xh) b0 - 1/2 <b, xh y0> b0 = -3/4 <b, xh y0> b0 + ((bh xh) y0) b0"),
    id("LEM85", AB, Mandatory, &[XHalf, Y0], ONE,
        "2 (bh y0)(xh b0) + 2 (bh xh)(y0 b0) - 2 ((bh xh) y0) b0 - 2 bh ((xh b0) y0) = 0"),
    id("FACT7.1", AB, Mandatory, &[X0, Y0], ONE, "(x0 b0)(y0 b0) = (x0 (y0 b0)) b0"),
    id("FACT7.2", AB, Mandatory, &[X0, Y0], ONE,
        "(x0 y0) b0 + 2 ((bh x0)(bh y0))_0 = y0 (x0 b0) + 2 (bh ((bh y0) x0))_0"),
    id("FACT7.3", AB, Mandatory, &[X0, Y0], ONE, "4 ((bh x0)(bh y0))_0 = y0 (x0 b0) + x0 (y0 b0) - (x0 y0) b0"),
    id("FACT7.4i", AB, Mandatory, &[XHalf, Y0], ONE,
        "2 ((xh b0)(bh y0))_0 - 1/4 <b,xh> y0 b0 + (bh xh)(y0 b0) - ((bh xh) y0) b0 = 0"),
    id("FACT7.4ii", AB, Mandatory, &[XHalf, Y0], ONE,
        "(2 (bh y0)(xh b0) + 2 bh ((xh b0) y0))_0 - 1/2 <b,xh> y0 b0 = 0"),
    id("FACT7.5i", AB, Mandatory, &[XHalf, Y0], ONE_CHAR,
        "((bh y0)(xh b0))_0 + (xh bh)(y0 b0) - 1/4 <b, xh y0> b0 = 1/4 <b,y0>(xh bh)_0 + 1/4 <b,xh> y0 b0"),
    id("FACT7.5ii", AB, Mandatory, &[XHalf, Y0], ONE_CHAR,
        "((bh y0)(xh b0))_0 + (bh (xh (y0 b0)))_0 - 1/4 <b, xh y0> b0 = 1/4 <b,xh> y0 b0"),
    id("FACT7.5iii", AB, Mandatory, &[XHalf, Y0], ONE_CHAR,
        "-(bh ((xh b0) y0))_0 + (bh (xh (y0 b0)))_0 - 1/4 <b, xh y0> b0 = 0"),
    id("T.AB12.1", AB, Mandatory, &[X, Y], ONE_B0, "comm(a, b, x y) - x comm(a, b, y) - comm(a, b, x) y = 0"),
    id("T.AB12.2i", AB, Mandatory, &[XHalf, YHalf], ONE_CHAR,
        "(xh yh) bh + (bh xh) yh + (bh yh) xh = 1/2 <b,yh> xh + 1/2 <b,xh> yh + <a, xh yh> bh"),
    id("T.AB12.2ii", AB, Mandatory, &[XHalf, Y0], ONE_CHAR, "(bh (xh y0))_0 + ((bh y0) xh)_0 - (bh xh) y0 = 0"),
];
