#pragma once

// Real harmonics at (theta, phi) = (0.3, 1.1) for N = 8 from scipy.special.sph_harm_y,
// and their polar derivatives by mpmath numerical differentiation at 30 digits.
namespace reference {

inline constexpr double kTheta = 0.3;
inline constexpr double kPhi = 1.1;

inline constexpr double kValues[] = {
    0.28209479177387814,
    -0.12868313764231115,
    0.22162820431795893,
    -0.41599760068439101,
    0.24498628623140503,
    -0.13051967273528819,
    -0.12071665015977048,
    -0.42193461936647142,
    0.35809546167416056,
    -0.32716243825892838,
    0.29400866264567871,
    -0.0034603603116347037,
    -0.33367659599887822,
    -0.011186404166991798,
    0.42975127059504165,
    -0.25962012841126386,
    0.3679675668782072,
    -0.4451988392111545,
    0.093404524321023086,
    0.12466590472483147,
    -0.17886580993668727,
    0.40301097877199188,
    0.13652901463879746,
    -0.35328804987407891,
    0.14305827219237555,
    -0.36809612404659037,
    0.55357340328305171,
    -0.23105180529720398,
    -0.18661372179768032,
    0.11827879680011423,
    0.17317629125082803,
    0.38236319522648882,
    -0.27277252082082981,
    -0.1833514253046358,
    0.21521802934207654,
    -0.0261034793251738,
    0.33335068549481389,
    -0.60200798671261591,
    0.37476015833214521,
    0.17069816305402272,
    -0.26987897354245188,
    -0.015625664093349211,
    0.33569936182804772,
    -0.050513524079601142,
    -0.3944810018286003,
    0.13545772322609476,
    0.14569909297273173,
    -0.04269130264667842,
    -0.077771893271947709,
    -0.27257552726256756,
    0.58562055848912709,
    -0.48735941054378129,
    -0.090026884778149741,
    0.39262829643709812,
    -0.071064850815731356,
    -0.13222809677794864,
    0.13042910319031187,
    -0.42745748985066617,
    -0.10387520441706451,
    0.31157063531303281,
    -0.035000613495610067,
    -0.034561016718144724,
    -0.13662734637869334,
    0.15941519921404465,
    0.19593662862842495,
    -0.5097774891557092,
    0.54189033221183491,
    -0.025227683528705889,
    -0.44946070690961254,
    0.2170094946661745,
    0.20081776571627097,
    -0.10507119737529645,
    -0.21780810121203129,
    -0.339666616854295,
    0.2935345142487531,
    0.17220813358502399,
    -0.17474114008024813,
    -0.0017890172495547676,
    -0.12642493000823535,
    0.29814224631513003,
    -0.21390127952947419};

inline constexpr double kDPhi[] = {
    0,
    -0.065495612742024811,
    -0.43544615475238729,
    -0.21172951060433137,
    0.24938041182550655,
    0.19000943693908867,
    -0.764978838905082,
    0.61424885437409016,
    0.36451833724601096,
    -0.49954573891811743,
    -0.27837429534657365,
    0.48484064734119375,
    -0.028682022070310294,
    1.5673580059015195,
    -0.40689857927880935,
    -0.39641509451821055,
    0.74913502121371911,
    0.19493268979220935,
    -1.1056589360249747,
    0.27085529216749582,
    1.3340143807756335,
    0.87560152587777962,
    -1.6161371856383921,
    0.15468905973659808,
    0.29124839094611082,
    -0.93674593400918305,
    0.039366134622482271,
    1.6210843777120643,
    -1.0058769299465249,
    -0.45661619582788704,
    1.5501200929426049,
    -1.4761160271520988,
    -1.4702862317621996,
    1.2864133686826571,
    0.015304748866219442,
    -0.066429192061404019,
    1.0179892006586317,
    -0.34921331604508893,
    -1.8754140084186306,
    1.9857742676911867,
    0.46354255696789143,
    -0.90128453807334341,
    -0.24230420417167967,
    -2.9136078917706807,
    0.67755827681818726,
    1.5758134494820779,
    -0.72912265058009429,
    -0.024764407935750462,
    -0.23750047895686779,
    -0.97112574751757508,
    0.63776946848465987,
    1.818348118160694,
    -2.9155557483139334,
    0.097617066576023065,
    1.9288909320396452,
    -0.34061607946875144,
    -2.3676395219278255,
    -1.1011191863178105,
    2.8194520577180526,
    0.077464135230402992,
    -1.1335085082984857,
    0.1289478736873868,
    -0.14879387141943487,
    0.56796076323196143,
    0.79780395695951689,
    -0.81463313437711227,
    -1.4952112101985844,
    3.5329264556177358,
    -1.0850264676691397,
    -2.5946604358133571,
    1.4752313641254247,
    0.82587822923562582,
    -2.1332794510875392,
    2.6698397949734933,
    2.1563397059446334,
    -2.0589957671007366,
    -0.42183612285351269,
    0.25053692953285367,
    0.34883806069267326,
    0.47643640170965224,
    -0.87095143160262312};

// Six nodes of scipy.integrate.lebedev_rule(29) with weights in solid-angle units.
inline constexpr double kLebedev302[][4] = {
    {1, 0, 0, 0.010739109397555787},
    {-1, 0, 0, 0.010739109397555787},
    {-0.65663294102196124, 0.37103417838482095, -0.65663294102196124, 0.045299536808460591},
    {-0.096183085226147838, -0.9907056213794081, -0.096183085226147838, 0.029557378086976182},
    {0, 0.57189558918789607, -0.82032641982775933, 0.045249250350174325},
    {-0.41277240831685308, -0.90244252953300041, -0.1233548532583327, 0.042629052407721503}};

}  // namespace reference
