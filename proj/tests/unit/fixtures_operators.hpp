// Generated by tests/oracles/operator_oracle.py (mpmath).
#pragma once

namespace fixtures {
inline constexpr double kOpL = 12, kOpP = 2;
inline constexpr int kOpN = 1000;
inline constexpr int kOpProbe[] = {0, 3, 40, 120, 250, 400, 520, 640};
struct OperatorCase { const char* op; double alpha; int density; double values[8]; };
inline constexpr OperatorCase kOperatorCases[] = {
    {"P1", 0.3, 0, {-0.497796392107917303, -0.49779638281784198, -0.497502844782135744, -0.474435174145359611, -0.173551385635069268, 0.0892184307903758612, 0.0349840020514856949, 0.0167133532681320392}},
    {"P1", 0.3, 1, {-0.164724983651008133, -0.164724969202439893, -0.164268711103423572, -0.130115774850978868, 0.0383691112344672911, 0.00626783195598842723, 0.0026258652690278658, 0.00133930805618802694}},
    {"P1", 0.3, 2, {-0.222634232505502088, -0.222634218794367933, -0.222201304788857332, -0.190085843786510354, 0.00850982090583576134, 0.0176493092576124882, 0.00733412325790687442, 0.00364394177184450659}},
    {"P1", 0.7, 0, {-0.683533124657622876, -0.683533105523070152, -0.682928541754047227, -0.635607748630586239, -0.0636579517029390903, 0.149633956351699856, 0.0218475478752376197, 0.00680825029877267806}},
    {"P1", 0.7, 1, {-0.430821081402382992, -0.430821029543382522, -0.429183542483141791, -0.307377472989132677, 0.15018180985738111, 0.00541083848095729853, 0.00144519093707912342, 0.000524233772241423505}},
    {"P1", 0.7, 2, {-0.475129773639544209, -0.475129724427352683, -0.473576399723287434, -0.361224445078835252, 0.124625456384167002, 0.0213000547189053027, 0.00446475190734796259, 0.00147406399202612803}},
    {"U", 0.25, 0, {0.0, -0.000130378878108833936, -0.0231713482005023406, -0.203484525185231013, -0.571962899042642934, -0.188119073789143576, -0.0562972134742004356, -0.0282284152118531392}},
    {"U", 0.25, 1, {0.0, -0.0000888653717087695805, -0.0157776738278442883, -0.127791177941998293, -0.0667580769220741969, -0.00963702104301689062, -0.00426793243901962829, -0.00227112376559876247}},
    {"U", 0.25, 2, {0.0, -0.0000961107084949350718, -0.0170666808256193778, -0.140297280451591131, -0.174832548763366373, -0.0322349409251929399, -0.0121504977383278006, -0.00618757982872604554}},
    {"TF", 0.3, 0, {0.0, -3.09669178302179924e-9, -0.0000978577658694854475, -0.00784298796556412662, -0.123144052338080474, -0.368309226476894244, -0.444757143514697643, -0.470920757673029532}},
    {"TF", 0.3, 1, {0.0, -4.8161894631656218e-9, -0.000152140650804806219, -0.0118494926230011921, -0.115496031592919229, -0.154643196790384785, -0.160400463015871738, -0.162504247739088301}},
    {"TF", 0.3, 2, {0.0, -4.57037810678150759e-9, -0.000144364134387525734, -0.0111813012879367377, -0.114985335217900248, -0.195118655227142098, -0.210999152406866358, -0.216700472692702542}},
    {"TF", 0.7, 0, {0.0, -6.37818426198222388e-9, -0.00020154942758959644, -0.0161155658290829984, -0.242966187210709047, -0.618216626465099526, -0.670305624485654837, -0.678932254051157164}},
    {"TF", 0.7, 1, {0.0, -1.72863337107095518e-8, -0.00054604116125373142, -0.0423741547102422164, -0.376985541219685746, -0.427160629089528614, -0.429807232533539606, -0.430449512379903637}},
    {"TF", 0.7, 2, {0.0, -1.64040641201210738e-8, -0.000518054460672675168, -0.0395297368476805076, -0.340524178359784049, -0.463429504454007807, -0.47227496936054239, -0.474120751265184681}},
    {"TH", 0.2, 0, {0.0, 9.24660846546755148e-9, 0.000292191094959196672, 0.0233631267615162163, 0.352233976192263471, 0.896243641915171748, 0.971758326074657315, 0.984264560246079057}},
    {"TH", 0.2, 1, {0.0, 2.50604173634627339e-8, 0.000791609118952192077, 0.0614308401211017616, 0.546525085137235896, 0.619265127317936432, 0.623101972539858904, 0.624033101215458367}},
    {"TH", 0.2, 2, {0.0, 2.37813697332795549e-8, 0.00075103612013561734, 0.057307218537438659, 0.493666162811578118, 0.671844995851548801, 0.684668480926020415, 0.687344355733620917}},
    {"TH", 0.1, 0, {0.0, 6.17606247865213571e-9, 0.000195163855980254891, 0.015614171887418557, 0.237809090094904967, 0.629600451274052277, 0.698718589414190422, 0.713102461469096824}},
    {"TH", 0.1, 1, {0.0, 1.46235209473576527e-8, 0.000461932250639306502, 0.0358733924599981823, 0.325825244433977191, 0.382658948963879185, 0.386730213947558803, 0.387826036635959738}},
    {"TH", 0.1, 2, {0.0, 1.37739426877231235e-8, 0.000435014763448354772, 0.0333231969840642243, 0.300357251564615073, 0.429623865046268838, 0.442259439323097329, 0.445344446841491873}},
};
}  // namespace fixtures
