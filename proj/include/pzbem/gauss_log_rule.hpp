// Generated by tools/gen_reference_data.py. Do not edit by hand.
// Gauss quadrature rules on (0,1) for the weight function -ln(x):
//   int_0^1 f(x) (-ln x) dx ~= sum_i w[i] f(x[i]),
// exact for polynomials f up to degree 2n-1.
#pragma once

namespace pzbem {

inline constexpr int gauss_log8_size = 8;
inline constexpr double gauss_log8_x[8] = {
    0.013320244160892465,
    0.079750429013894938,
    0.19787102932618805,
    0.35415399435190942,
    0.52945857523491728,
    0.70181452993909996,
    0.84937932044110668,
    0.95332645005635979,
};
inline constexpr double gauss_log8_w[8] = {
    0.16441660472800289,
    0.23752561002330602,
    0.22684198443191913,
    0.17575407900607024,
    0.11292403024675905,
    0.057872210717782072,
    0.020979073742132978,
    0.0036864071040276190,
};

inline constexpr int gauss_log16_size = 16;
inline constexpr double gauss_log16_x[16] = {
    0.0038978344871159159,
    0.023028945616873240,
    0.058280398306240412,
    0.10867836509105404,
    0.17260945490984394,
    0.24793705447057850,
    0.33209454912991716,
    0.42218391058194860,
    0.51508247338146260,
    0.60755612044772872,
    0.69637565322821406,
    0.77843256587326541,
    0.85085026971539108,
    0.91108685722227191,
    0.95702557170354216,
    0.98704780024798448,
};
inline constexpr double gauss_log16_w[16] = {
    0.060791710043591233,
    0.10291567751758214,
    0.12235566204600919,
    0.12756924693701599,
    0.12301357460007092,
    0.11184724485548572,
    0.096596385152124341,
    0.079356664351473139,
    0.061850494581965207,
    0.045435246507726669,
    0.031098974751581806,
    0.019459765927360842,
    0.010776254963205526,
    0.0049725428900876417,
    0.0016782011100511945,
    0.00028235376466843632,
};

}  // namespace pzbem
