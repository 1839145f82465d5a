#pragma once

// Reference values computed offline in 40-90 digit arithmetic (mpmath):
// pi_pq from the beta closed form cross-checked against tanh-sinh
// quadrature, sin_pq by bisection on the regularized incomplete beta, and
// cos_pq = (1 - s^q)^{1/p} at the same precision. Values are rounded to 20
// digits; the abscissae are the exact doubles passed to the library.

namespace fixtures {

struct PiValue {
    double p, q, pi;
};

inline constexpr PiValue kPi[] = {
    {2, 2, 3.1415926535897932385},
    {3, 3, 2.4183991523122904675},
    {2, 4, 2.6220575542921198105},
    {2, 3, 2.8043642106509085223},
    {5, 2, 2.2992878184479697638},
    {10, 10, 2.0332814769261039263},
};

struct QuarterValue {
    double p, q, y, s, c;
};

// y in {0.3, 1, pi/2 - 1e-3, pi/2 - 1e-7}
inline constexpr QuarterValue kQuarter[] = {
    {2, 3, 0.29999999999999999, 0.29898944938855153098, 0.98654545288384638758},
    {2, 3, 1, 0.8834010473417957934, 0.55731150200801634797},
    {2, 3, 1.4011821053254543, 0.99999925000018749999, 0.0014999992500002444554},
    {2, 3, 1.4021820053254543, 0.9999999999999925, 1.499999998829190498e-7},
    {3, 3, 0.29999999999999999, 0.29932412669914265542, 0.99097956812612613582},
    {3, 3, 1, 0.91139233322908489354, 0.62399495556695192045},
    {3, 3, 1.2081995761561453, 0.99997018593807694257, 0.044720826220438323089},
    {3, 3, 1.2091994761561453, 0.99999999997018576034, 0.00044721359531464059956},
    {2, 4, 0.29999999999999999, 0.29975716391265678507, 0.99595491588282056485},
    {2, 4, 1, 0.90768322140494616793, 0.56675144032376728534},
    {2, 4, 1.3100287771460599, 0.99999900000049999973, 0.0019999980000017713735},
    {2, 4, 1.31102867714606, 0.99999999999999, 1.9999999986432532146e-7},
    {5, 2, 0.29999999999999999, 0.29817332482883337, 0.98155018754011518064},
    {5, 2, 1, 0.91665039644368390912, 0.69292987888957892488},
    {5, 2, 1.1486439092239848, 0.99984000142224208217, 0.19999644436994608484},
    {5, 2, 1.1496438092239849, 0.99999999840000000056, 0.019999999995403782214},
    {10, 10, 0.29999999999999999, 0.29999998389570937484, 0.99999940950874792351},
    {10, 10, 1, 0.98790643964576319647, 0.80520053178244373288},
    {10, 10, 1.0156407384630519, 0.99946681087245341488, 0.59235757859576774582},
    {10, 10, 1.016640638463052, 0.99999998083575672952, 0.2129360353889142804},
    {1.5, 3, 0.29999999999999999, 0.2986569091757337225, 0.9821608789285161479},
    {1.5, 3, 1, 0.86022788573558314092, 0.50927662318678750924},
    {1.5, 3, 1.76563875028545, 0.99999999966666666672, 9.9999999966651821256e-7},
    {1.5, 3, 1.7666386502854499, 1.0, 1.0000000018858748173e-14},
    {10, 2, 0.29999999999999999, 0.29908068076586383101, 0.99067320225507369805},
    {10, 2, 1, 0.95209058316006241225, 0.78902740034960087264},
    {10, 2, 1.0663798597974419, 0.99955406897280388458, 0.49547310384346538426},
    {10, 2, 1.0673797597974419, 0.99999998397388174456, 0.17806798058355053859},
    {1.2, 4, 0.29999999999999999, 0.29959606002751243181, 0.99328175965213076544},
    {1.2, 4, 1, 0.87318449613525389158, 0.48405160571300748611},
    {1.2, 4, 2.3704158883249216, 0.99999999999999999998, 1.3168724279827082784e-16},
    {1.2, 4, 2.3714157883249216, 1.0, 1.3168724162702579111e-36},
};

inline constexpr double kSin33At1 = 0.91139233322908489354;
inline constexpr double kSeries3At02For33 = 0.199866615873016;

// q-power bound on (pi/2, pi): deepest violation and first crossing.
inline constexpr double kQpower33Crossing = 1.3516025641139343;
inline constexpr double kQpower33DeepestX = 1.81377377339;
inline constexpr double kQpower33DeepestMargin = -0.07946724798603603;
inline constexpr double kQpower33DeepestLhs = 0.40661107131763588;
inline constexpr double kQpower33DeepestRhs = 0.32714382333159985;
inline constexpr double kQpower24DeepestX = 1.82358348404;
inline constexpr double kQpower24DeepestMargin = -0.20015922229062312;

// |sin_pq(x) - series3(x)| at x = 0.4, 0.2, 0.1, 0.05
struct SeriesRemainder {
    double p, q, r[4];
};

inline constexpr SeriesRemainder kRemainder[] = {
    {2, 2, {3.24358e-7, 2.53827e-9, 1.98385e-11, 1.55005e-13}},
    {2, 4, {4.72181e-9, 5.77563e-13, 7.05122e-17, 8.60752e-21}},
    {3, 3, {9.76947e-8, 9.38970e-11, 9.15160e-14, 8.93491e-17}},
};

}  // namespace fixtures
