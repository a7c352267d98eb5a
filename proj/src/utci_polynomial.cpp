// Coefficients of the sixth-order UTCI regression polynomial (Broede et al.,
// UTCI_a002). Each term is coef * ta^i * va^j * dtr^k * pa^l with ta in C,
// va in m/s at 10 m, dtr = tr - ta in K and pa in kPa. The leading "ta" term
// of the published expression is added separately.
#include "utci_polynomial.hpp"

namespace clima::comfort::detail {

const std::array<UtciTerm, kUtciTermCount> kUtciTerms{{
    {6.075620520e-01, 0, 0, 0, 0},
    {-2.277123430e-02, 1, 0, 0, 0},
    {-2.258365200e+00, 0, 1, 0, 0},
    {3.983740290e-01, 0, 0, 1, 0},
    {5.127334970e+00, 0, 0, 0, 1},
    {8.064702490e-04, 2, 0, 0, 0},
    {8.803260350e-02, 1, 1, 0, 0},
    {-7.512695050e-01, 0, 2, 0, 0},
    {1.839453140e-04, 1, 0, 1, 0},
    {-2.005182690e-02, 0, 1, 1, 0},
    {7.550430900e-04, 0, 0, 2, 0},
    {-3.127885610e-01, 1, 0, 0, 1},
    {5.480506120e-01, 0, 1, 0, 1},
    {-3.694763480e-02, 0, 0, 1, 1},
    {-2.806264060e+00, 0, 0, 0, 2},
    {-1.542713720e-04, 3, 0, 0, 0},
    {2.168444540e-03, 2, 1, 0, 0},
    {-4.083502710e-03, 1, 2, 0, 0},
    {1.581372560e-01, 0, 3, 0, 0},
    {-1.737545100e-04, 2, 0, 1, 0},
    {8.928598370e-04, 1, 1, 1, 0},
    {1.699924150e-04, 0, 2, 1, 0},
    {-5.650952150e-05, 1, 0, 2, 0},
    {1.545472500e-04, 0, 1, 2, 0},
    {-1.212066730e-05, 0, 0, 3, 0},
    {-1.967018610e-02, 2, 0, 0, 1},
    {-3.305528230e-03, 1, 1, 0, 1},
    {-4.292236220e-02, 0, 2, 0, 1},
    {1.623253220e-03, 1, 0, 1, 1},
    {8.642033900e-03, 0, 1, 1, 1},
    {-7.324691800e-04, 0, 0, 2, 1},
    {5.487124840e-01, 1, 0, 0, 2},
    {-3.088063650e-01, 0, 1, 0, 2},
    {5.145074240e-02, 0, 0, 1, 2},
    {-3.538741230e-02, 0, 0, 0, 3},
    {-3.246517350e-06, 4, 0, 0, 0},
    {-1.533470870e-05, 3, 1, 0, 0},
    {-5.216706750e-05, 2, 2, 0, 0},
    {-6.572631430e-05, 1, 3, 0, 0},
    {-1.277627530e-02, 0, 4, 0, 0},
    {-7.607811590e-07, 3, 0, 1, 0},
    {3.454330480e-06, 2, 1, 1, 0},
    {-4.992043140e-05, 1, 2, 1, 0},
    {8.492429320e-05, 0, 3, 1, 0},
    {-4.521665640e-07, 2, 0, 2, 0},
    {5.241109700e-06, 1, 1, 2, 0},
    {-1.562363070e-05, 0, 2, 2, 0},
    {-2.182036600e-07, 1, 0, 3, 0},
    {1.250067340e-06, 0, 1, 3, 0},
    {-1.303690250e-09, 0, 0, 4, 0},
    {9.996908700e-04, 3, 0, 0, 1},
    {-1.641194400e-03, 2, 1, 0, 1},
    {5.008456670e-03, 1, 2, 0, 1},
    {-1.258135020e-03, 0, 3, 0, 1},
    {-3.142796800e-05, 2, 0, 1, 1},
    {-6.874051810e-04, 1, 1, 1, 1},
    {-3.592174760e-05, 0, 2, 1, 1},
    {-1.873819640e-05, 1, 0, 2, 1},
    {2.778629300e-05, 0, 1, 2, 1},
    {-3.594131730e-07, 0, 0, 3, 1},
    {-3.994284100e-03, 2, 0, 0, 2},
    {1.169523640e-02, 1, 1, 0, 2},
    {2.107877560e-03, 0, 2, 0, 2},
    {-4.325109970e-03, 1, 0, 1, 2},
    {-2.660163050e-04, 0, 1, 1, 2},
    {3.047888930e-04, 0, 0, 2, 2},
    {-2.212011900e-01, 1, 0, 0, 3},
    {4.534334550e-02, 0, 1, 0, 3},
    {-2.269216150e-03, 0, 0, 1, 3},
    {6.141553450e-01, 0, 0, 0, 4},
    {7.326028520e-08, 5, 0, 0, 0},
    {-5.729837040e-07, 4, 1, 0, 0},
    {1.945446670e-06, 3, 2, 0, 0},
    {2.226975240e-07, 2, 3, 0, 0},
    {9.668918750e-06, 1, 4, 0, 0},
    {4.563066720e-04, 0, 5, 0, 0},
    {3.778302870e-08, 4, 0, 1, 0},
    {-3.779257740e-07, 3, 1, 1, 0},
    {2.474171780e-07, 2, 2, 1, 0},
    {1.351913280e-06, 1, 3, 1, 0},
    {-4.994103010e-06, 0, 4, 1, 0},
    {2.466888780e-08, 3, 0, 2, 0},
    {-8.758749820e-08, 2, 1, 2, 0},
    {-1.338956140e-07, 1, 2, 2, 0},
    {6.517117210e-07, 0, 3, 2, 0},
    {7.512694820e-09, 2, 0, 3, 0},
    {-1.815847360e-09, 1, 1, 3, 0},
    {-3.365146300e-08, 0, 2, 3, 0},
    {4.139084610e-10, 1, 0, 4, 0},
    {-5.082203840e-09, 0, 1, 4, 0},
    {6.621548790e-10, 0, 0, 5, 0},
    {9.517385120e-06, 4, 0, 0, 1},
    {-5.166706940e-06, 3, 1, 0, 1},
    {1.006012570e-06, 2, 2, 0, 1},
    {-1.793303910e-04, 1, 3, 0, 1},
    {1.297358080e-04, 0, 4, 0, 1},
    {2.598355590e-06, 3, 0, 1, 1},
    {-9.138638720e-06, 2, 1, 1, 1},
    {3.286965110e-05, 1, 2, 1, 1},
    {-1.243823000e-05, 0, 3, 1, 1},
    {4.809252390e-06, 2, 0, 2, 1},
    {-5.060045920e-06, 1, 1, 2, 1},
    {2.530167230e-06, 0, 2, 2, 1},
    {7.043880460e-07, 1, 0, 3, 1},
    {-4.797687310e-07, 0, 1, 3, 1},
    {3.943676740e-08, 0, 0, 4, 1},
    {-9.540091910e-04, 3, 0, 0, 2},
    {4.952719030e-04, 2, 1, 0, 2},
    {-6.984457380e-04, 1, 2, 0, 2},
    {4.178565900e-04, 0, 3, 0, 2},
    {8.992811560e-05, 2, 0, 1, 2},
    {2.637895860e-04, 1, 1, 1, 2},
    {-1.068233060e-04, 0, 2, 1, 2},
    {-6.420708360e-05, 1, 0, 2, 2},
    {7.680233840e-06, 0, 1, 2, 2},
    {-4.364977250e-06, 0, 0, 3, 2},
    {1.551260380e-02, 2, 0, 0, 3},
    {-4.329438620e-03, 1, 1, 0, 3},
    {2.175086100e-04, 0, 2, 0, 3},
    {3.802619820e-04, 1, 0, 1, 3},
    {-7.963554480e-04, 0, 1, 1, 3},
    {3.021220350e-04, 0, 0, 2, 3},
    {-6.167559310e-02, 1, 0, 0, 4},
    {3.553753870e-03, 0, 1, 0, 4},
    {-1.485264210e-03, 0, 0, 1, 4},
    {8.827731080e-02, 0, 0, 0, 5},
    {1.359590730e-09, 6, 0, 0, 0},
    {-2.550901450e-09, 5, 1, 0, 0},
    {1.140995310e-08, 4, 2, 0, 0},
    {-4.161170310e-08, 3, 3, 0, 0},
    {2.527858520e-09, 2, 4, 0, 0},
    {-1.742025460e-07, 1, 5, 0, 0},
    {-5.914912690e-06, 0, 6, 0, 0},
    {5.430796730e-10, 5, 0, 1, 0},
    {-1.696993770e-09, 4, 1, 1, 0},
    {1.075964660e-08, 3, 2, 1, 0},
    {-6.215312540e-09, 2, 3, 1, 0},
    {-1.894892580e-08, 1, 4, 1, 0},
    {8.153001140e-08, 0, 5, 1, 0},
    {2.426743480e-10, 4, 0, 2, 0},
    {-1.507430640e-09, 3, 1, 2, 0},
    {2.497098240e-09, 2, 2, 2, 0},
    {1.949600530e-09, 1, 3, 2, 0},
    {-1.003611130e-08, 0, 4, 2, 0},
    {9.790638480e-11, 3, 0, 3, 0},
    {-3.521976710e-10, 2, 1, 3, 0},
    {1.359083590e-10, 1, 2, 3, 0},
    {4.170326200e-10, 0, 3, 3, 0},
    {9.226522540e-12, 2, 0, 4, 0},
    {-2.247309610e-11, 1, 1, 4, 0},
    {1.171391330e-10, 0, 2, 4, 0},
    {4.038632600e-13, 1, 0, 5, 0},
    {1.950872030e-12, 0, 1, 5, 0},
    {-4.736024690e-12, 0, 0, 6, 0},
    {-4.664263410e-07, 5, 0, 0, 1},
    {9.526924320e-07, 4, 1, 0, 1},
    {-1.817486440e-06, 3, 2, 0, 1},
    {2.349944410e-06, 2, 3, 0, 1},
    {1.290648700e-06, 1, 4, 0, 1},
    {-2.285586860e-06, 0, 5, 0, 1},
    {-4.771365230e-08, 4, 0, 1, 1},
    {5.159168060e-07, 3, 1, 1, 1},
    {-7.105424540e-07, 2, 2, 1, 1},
    {-7.385844000e-09, 1, 3, 1, 1},
    {2.206092960e-07, 0, 4, 1, 1},
    {-8.754920400e-08, 3, 0, 2, 1},
    {1.143253670e-07, 2, 1, 2, 1},
    {-1.728570350e-08, 1, 2, 2, 1},
    {-3.950793980e-08, 0, 3, 2, 1},
    {-1.893091670e-08, 2, 0, 3, 1},
    {7.960799780e-09, 1, 1, 3, 1},
    {1.628970580e-09, 0, 2, 3, 1},
    {-1.185662470e-09, 1, 0, 4, 1},
    {3.346780410e-10, 0, 1, 4, 1},
    {-1.156064470e-10, 0, 0, 5, 1},
    {1.930909780e-05, 4, 0, 0, 2},
    {-1.907108820e-05, 3, 1, 0, 2},
    {2.301090730e-05, 2, 2, 0, 2},
    {-1.270438710e-05, 1, 3, 0, 2},
    {-3.046204720e-06, 0, 4, 0, 2},
    {-7.146639430e-07, 3, 0, 1, 2},
    {-7.011990030e-06, 2, 1, 1, 2},
    {3.613411360e-06, 1, 2, 1, 2},
    {2.297489670e-07, 0, 3, 1, 2},
    {1.162579710e-06, 2, 0, 2, 2},
    {-5.474468960e-07, 1, 1, 2, 2},
    {-3.599379100e-08, 0, 2, 2, 2},
    {1.687379690e-07, 1, 0, 3, 2},
    {2.674892710e-08, 0, 1, 3, 2},
    {3.239268970e-09, 0, 0, 4, 2},
    {-2.639172790e-04, 3, 0, 0, 3},
    {1.453898260e-04, 2, 1, 0, 3},
    {-6.667247020e-05, 1, 2, 0, 3},
    {3.332171400e-05, 0, 3, 0, 3},
    {-5.453143140e-09, 2, 0, 1, 3},
    {2.534580340e-05, 1, 1, 1, 3},
    {-6.312236580e-06, 0, 2, 1, 3},
    {-4.774035470e-06, 1, 0, 2, 3},
    {1.738257150e-06, 0, 1, 2, 3},
    {-4.090878980e-07, 0, 0, 3, 3},
    {1.333748460e-03, 2, 0, 0, 4},
    {-5.130278510e-04, 1, 1, 0, 4},
    {1.024497570e-04, 0, 2, 0, 4},
    {-4.114691830e-05, 1, 0, 1, 4},
    {-6.804344150e-06, 0, 1, 1, 4},
    {-9.776759060e-06, 0, 0, 2, 4},
    {-3.018593060e-03, 1, 0, 0, 5},
    {1.044529890e-03, 0, 1, 0, 5},
    {2.470905390e-04, 0, 0, 1, 5},
    {1.483480650e-03, 0, 0, 0, 6},
}};

}  // namespace clima::comfort::detail
