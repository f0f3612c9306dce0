// Generated by tools/gen_reference_data.py. Do not edit by hand.
// Reference values computed with mpmath at 50 significant digits.
#pragma once

namespace refdata {

struct BesselRef {
    double zre, zim, k0re, k0im, k1re, k1im;
};

// Log grid: 40 magnitudes in [1e-6, 1e2] x 5 arguments in [-pi/3, pi/3].
inline constexpr int bessel_grid_size = 200;
inline constexpr BesselRef bessel_grid[200] = {
    {5.0000000000000000e-7, -8.6602540378443865e-7, 13.931442073621047, 1.0471975511932341, 499999.99999593869, 866025.40379042585},
    {8.6602540378443865e-7, -5.0000000000000000e-7, 13.931442073624666, 0.52359877559513157, 866025.40377805875, 500000.00000338114},
    {1.0000000000000000e-6, 0.0, 13.931442073626419, 0.0, 999999.99999278428, 0.0},
    {8.6602540378443865e-7, 5.0000000000000000e-7, 13.931442073624666, -0.52359877559513157, 866025.40377805875, -500000.00000338114},
    {5.0000000000000000e-7, 8.6602540378443865e-7, 13.931442073621047, -1.0471975511932341, 499999.99999593869, -866025.40379042585},
    {8.0185937187566517e-7, -1.3888611726139185e-6, 13.459116926337791, 1.0471975511882097, 311775.36705737189, 540010.77631203111},
    {1.3888611726139185e-6, -8.0185937187566517e-7, 13.459116926346797, 0.52359877559041585, 540010.77629285376, 311775.36706892875},
    {1.6037187437513303e-6, 0.0, 13.459116926351154, 0.0, 623550.73411619820, 0.0},
    {1.3888611726139185e-6, 8.0185937187566517e-7, 13.459116926346797, -0.52359877559041585, 540010.77629285376, -311775.36706892875},
    {8.0185937187566517e-7, 1.3888611726139185e-6, 13.459116926337791, -1.0471975511882097, 311775.36705737189, -540010.77631203111},
    {1.2859569045296726e-6, -2.2273426949893930e-6, 12.986791779050962, 1.0471975511757009, 194407.75900556646, 336724.11601463342},
    {2.2273426949893930e-6, -1.2859569045296726e-6, 12.986791779073342, 0.52359877557870086, 336724.11598493038, 194407.75902349301},
    {2.5719138090593451e-6, 0.0, 12.986791779084157, 0.0, 388815.51801346539, 0.0},
    {2.2273426949893930e-6, 1.2859569045296726e-6, 12.986791779073342, -0.52359877557870086, 336724.11598493038, -194407.75902349301},
    {1.2859569045296726e-6, 2.2273426949893930e-6, 12.986791779050962, -1.0471975511757009, 194407.75900556646, -336724.11601463342},
    {2.0623131914506759e-6, -3.5720312287120919e-6, 12.514466631755315, 1.0471975511445927, 121223.10083882616, 209964.56975254003},
    {3.5720312287120919e-6, -2.0623131914506759e-6, 12.514466631810865, 0.52359877554963419, 209964.56970659186, 121223.10086660122},
    {4.1246263829013518e-6, 0.0, 12.514466631837676, 0.0, 242446.20168139294, 0.0},
    {3.5720312287120919e-6, 2.0623131914506759e-6, 12.514466631810865, -0.52359877554963419, 209964.56970659186, -121223.10086660122},
    {2.0623131914506759e-6, 3.5720312287120919e-6, 12.514466631755315, -1.0471975511445927, 121223.10083882616, -209964.56975254003},
    {3.3073703206150748e-6, -5.7285334347506769e-6, 12.042141484437955, 1.0471975510673196, 75588.753507042903, 130923.56163031001},
    {5.7285334347506769e-6, -3.3073703206150748e-6, 12.042141484575659, 0.52359877547761192, 130923.56155932780, 75588.753550024136},
    {6.6147406412301496e-6, 0.0, 12.042141484642031, 0.0, 151177.50702008471, 0.0},
    {5.7285334347506769e-6, 3.3073703206150748e-6, 12.042141484575659, -0.52359877547761192, 130923.56155932780, -75588.753550024136},
    {3.3073703206150748e-6, 5.7285334347506769e-6, 12.042141484437955, -1.0471975510673196, 75588.753507042903, -130923.56163031001},
    {5.3040917756972424e-6, -9.1869564435158490e-6, 11.569816337067236, 1.0471975508756132, 47133.422719074275, 81637.483000497175},
    {9.1869564435158490e-6, -5.3040917756972424e-6, 11.569816337408110, 0.52359877529941028, 81637.482891000906, 47133.422785498828},
    {1.0608183551394485e-5, 0.0, 11.569816337572169, 0.0, 94266.845447769108, 0.0},
    {9.1869564435158490e-6, 5.3040917756972424e-6, 11.569816337408110, -0.52359877529941028, 81637.482891000906, -47133.422785498828},
    {5.3040917756972424e-6, 9.1869564435158490e-6, 11.569816337067236, -1.0471975508756132, 47133.422719074275, -81637.483000497175},
    {8.5062713992629445e-6, -1.4733294246493427e-5, 11.097491189565660, 1.0471975504006504, 29390.080304334526, 50905.112505413767},
    {1.4733294246493427e-5, -8.5062713992629445e-6, 11.097491190408184, 0.52359877485918034, 50905.112336771453, 29390.080406843101},
    {1.7012542798525889e-5, 0.0, 11.097491190813041, 0.0, 58780.160624097721, 0.0},
    {1.4733294246493427e-5, 8.5062713992629445e-6, 11.097491190408184, -0.52359877485918034, 50905.112336771453, -29390.080406843101},
    {8.5062713992629445e-6, 1.4733294246493427e-5, 11.097491189565660, -1.0471975504006504, 29390.080304334526, -50905.112505413767},
    {1.3641666882433840e-5, -2.3628060140305142e-5, 10.625166041743954, 1.0471975492256112, 18326.206097143612, 31741.920347382888},
    {2.3628060140305142e-5, -1.3641666882433840e-5, 10.625166043822955, 0.52359877377347109, 31741.920088088176, 18326.206255095233},
    {2.7283333764867680e-5, 0.0, 10.625166044820264, 0.0, 36652.412219030470, 0.0},
    {2.3628060140305142e-5, 1.3641666882433840e-5, 10.625166043822955, -0.52359877377347109, 31741.920088088176, -18326.206255095233},
    {1.3641666882433840e-5, 2.3628060140305142e-5, 10.625166041743954, -1.0471975492256112, 18326.206097143612, -31741.920347382888},
    {2.1877396875370925e-5, -3.7892762925491044e-5, 10.152840893141119, 1.0471975463231679, 11427.319184306134, 19792.697848100294},
    {3.7892762925491044e-5, -2.1877396875370925e-5, 10.152840898262067, 0.52359877110077668, 19792.697450162209, 11427.319427282864},
    {4.3754793750741850e-5, 0.0, 10.152840900714026, 0.0, 22854.638408293476, 0.0},
    {3.7892762925491044e-5, 2.1877396875370925e-5, 10.152840898262067, -0.52359877110077668, 19792.697450162209, -11427.319427282864},
    {2.1877396875370925e-5, 3.7892762925491044e-5, 10.152840893141119, -1.0471975463231679, 11427.319184306134, -19792.697848100294},
    {3.5085191433519140e-5, -6.0769334156135481e-5, 9.6805157426378837, 1.0471975391660793, 7125.5131411035699, 12341.751445795375},
    {6.0769334156135481e-5, -3.5085191433519140e-5, 9.6805157552271018, 0.52359876453458254, 12341.750836317493, 7125.5135141982882},
    {7.0170382867038279e-5, 0.0, 9.6805157612426191, 0.0, 14251.026345844637, 0.0},
    {6.0769334156135481e-5, 3.5085191433519140e-5, 9.6805157552271018, -0.52359876453458254, 12341.750836317493, -7125.5135141982882},
    {3.5085191433519140e-5, 6.0769334156135481e-5, 9.6805157426378837, -1.0471975391660793, 7125.5131411035699, -12341.751445795375},
    {5.6266779130038251e-5, -9.7456920231482404e-5, 9.2081905875262744, 1.0471975215501593, 4443.1187572190705, 7695.7084366185063},
    {9.7456920231482404e-5, -5.6266779130038251e-5, 9.2081906184093002, 0.52359874843839207, 7695.7075052187575, 4443.1193289818489},
    {0.00011253355826007650, 0.0, 9.2081906331330132, 0.0, 8886.2376164947865, 0.0},
    {9.7456920231482404e-5, 5.6266779130038251e-5, 9.2081906184093002, -0.52359874843839207, 7695.7075052187575, -4443.1193289818489},
    {5.6266779130038251e-5, 9.7456920231482404e-5, 9.2081905875262744, -1.0471975215501593, 4443.1187572190705, -7695.7084366185063},
    {9.0236088341358516e-5, -0.00015629348968350657, 8.7358654212806416, 1.0471974782791882, 2770.5096664654841, 4798.6650431795694},
    {0.00015629348968350657, -9.0236088341358516e-5, 8.7358654968631901, 0.52359870907603416, 4798.6636232976796, 2770.5105407913950},
    {0.00018047217668271703, 0.0, 8.7358655328083452, 0.0, 5541.0194966011169, 0.0},
    {0.00015629348968350657, 9.0236088341358516e-5, 8.7358654968631901, -0.52359870907603416, 4798.6636232976796, -2770.5105407913950},
    {9.0236088341358516e-5, 0.00015629348968350657, 8.7358654212806416, -1.0471974782791882, 2770.5096664654841, -4798.6650431795694},
    {0.00014471330623583754, -0.00025065079893174466, 8.2635402282467097, 1.0471973722255141, 1727.5528819552266, 2992.2117124402674},
    {0.00025065079893174466, -0.00014471330623583754, 8.2635404127471046, 0.52359861307497540, 2992.2095537377408, 1727.5542157763444},
    {0.00028942661247167509, 0.0, 8.2635405002492436, 0.0, 3455.1060263913129, 0.0},
    {0.00025065079893174466, 0.00014471330623583754, 8.2635404127471046, -0.52359861307497540, 2992.2095537377408, -1727.5542157763444},
    {0.00014471330623583754, 0.00025065079893174466, 8.2635402282467097, -1.0471973722255141, 1727.5528819552266, -2992.2117124402674},
    {0.00023207944168063894, -0.00040197338438308484, 7.7912149710670611, 1.0471971129299490, 1077.2161724329340, 1865.7967172694681},
    {0.00040197338438308484, -0.00023207944168063894, 7.7912154201463330, 0.52359837963386485, 1865.7934451798959, 1077.2182018899049},
    {0.00046415888336127789, 0.0, 7.7912156324743775, 0.0, 2154.4327658112423, 0.0},
    {0.00040197338438308484, 0.00023207944168063894, 7.7912154201463330, -0.52359837963386485, 1865.7934451798959, -1077.2182018899049},
    {0.00023207944168063894, 0.00040197338438308484, 7.7912149710670611, -1.0471971129299490, 1077.2161724329340, -1865.7967172694681},
    {0.00037219015066258442, -0.00064465225102431145, 7.3188895611305486, 1.0471964806758182, 671.69787370361591, 1163.4202748119510},
    {0.00064465225102431145, -0.00037219015066258442, 7.3188906506946524, 0.52359781387512708, 1163.4153317860175, 671.70095258703204},
    {0.00074438030132516884, 0.0, 7.3188911640695774, 0.0, 1343.3964224848278, 0.0},
    {0.00064465225102431145, 0.00037219015066258442, 7.3188906506946524, -0.52359781387512708, 1163.4153317860175, -671.70095258703204},
    {0.00037219015066258442, 0.00064465225102431145, 7.3188895611305486, -1.0471964806758182, 671.69787370361591, -1163.4202748119510},
    {0.00059688832085721825, -0.0010338408981691760, 6.8465637897462991, 1.0471949436425328, 418.83608617779541, 725.45360154106447},
    {0.0010338408981691760, -0.00059688832085721825, 6.8465664237333327, 0.52359644786203843, 725.44616262667656, 418.84074191547561},
    {0.0011937766417144365, 0.0, 6.8465676599506384, 0.0, 837.67325498866502, 0.0},
    {0.0010338408981691760, 0.00059688832085721825, 6.8465664237333327, -0.52359644786203843, 725.44616262667656, -418.84074191547561},
    {0.00059688832085721825, 0.0010338408981691760, 6.8465637897462991, -1.0471949436425328, 418.83608617779541, -725.45360154106447},
    {0.00095724098808497904, -0.0016579900264506180, 6.3742371695839819, 1.0471912196057431, 261.16309544312844, 452.36015020543521},
    {0.0016579900264506180, -0.00095724098808497904, 6.3742435111753792, 0.52359316367307033, 452.34900338896054, 261.17010980792150},
    {0.0019144819761699581, 0.0, 6.3742464742229371, 0.0, 522.32792711932131, 0.0},
    {0.0016579900264506180, 0.00095724098808497904, 6.3742435111753792, -0.52359316367307033, 452.34900338896054, -261.17010980792150},
    {0.00095724098808497904, 0.0016579900264506180, 6.3742371695839819, -1.0471912196057431, 261.16309544312844, -452.36015020543521},
    {0.0015351453148789248, -0.0026589496823716200, 5.9019085743350552, 1.0471822308813239, 162.84472663854923, 282.07397023124518},
    {0.0026589496823716200, -0.0015351453148789248, 5.9019237712476534, 0.52358530619077094, 282.05734975979530, 162.85525061910643},
    {0.0030702906297578495, 0.0, 5.9019308354017182, 0.0, 325.69223768388295, 0.0},
    {0.0026589496823716200, 0.0015351453148789248, 5.9019237712476534, -0.52358530619077094, 282.05734975979530, -162.85525061910643},
    {0.0015351453148789248, 0.0026589496823716200, 5.9019085743350552, -1.0471822308813239, 162.84472663854923, -282.07397023124518},
    {0.0024619413158533696, -0.0042642074443110133, 5.4295754340180032, 1.0471606279841309, 101.53634921068441, 175.89397870772886},
    {0.0042642074443110133, -0.0024619413158533696, 5.4296116563390575, 0.52356661269804020, 175.86933823138095, 101.55206387876829},
    {0.0049238826317067393, 0.0, 5.4296283933697439, 0.0, 203.07716373945094, 0.0},
    {0.0042642074443110133, 0.0024619413158533696, 5.4296116563390575, -0.52356661269804020, 175.86933823138095, -101.55206387876829},
    {0.0024619413158533696, 0.0042642074443110133, 5.4295754340180032, -1.0471606279841309, 101.53634921068441, -175.89397870772886},
    {0.0039482614342498631, -0.0068385894056855292, 4.9572319792783369, 1.0471089645718537, 63.304654834317026, 109.68833282937356},
    {0.0068385894056855292, -0.0039482614342498631, 4.9573177770492541, 0.52352243170001985, 109.65204644380375, 63.327991878911962},
    {0.0078965228684997263, 0.0, 4.9573571420920201, 0.0, 126.61647044964117, 0.0},
    {0.0068385894056855292, 0.0039482614342498631, 4.9573177770492541, -0.52352243170001985, 109.65204644380375, -63.327991878911962},
    {0.0039482614342498631, 0.0068385894056855292, 4.9572319792783369, -1.0471089645718537, 63.304654834317026, -109.68833282937356},
    {0.0063319008673370162, -0.010967174010717154, 4.4848655329934675, 1.0469861149650859, 39.461090601368193, 68.409914161657066},
    {0.010967174010717154, -0.0063319008673370162, 4.4850672608820786, 0.52341882425010552, 68.356900955202453, 39.495525941203162},
    {0.012663801734674032, 0.0, 4.4851590379034150, 0.0, 78.933663816654493, 0.0},
    {0.010967174010717154, 0.0063319008673370162, 4.4850672608820786, -0.52341882425010552, 68.356900955202453, -39.495525941203162},
    {0.0063319008673370162, 0.010967174010717154, 4.4848655329934675, -1.0469861149650859, 39.461090601368193, -68.409914161657066},
    {0.010154588104523679, -0.017588262526969552, 4.0124490470483502, 1.0466959409202444, 24.587294852901581, 42.676442581109602},
    {0.017588262526969552, -0.010154588104523679, 4.0129191718814498, 0.52317812748653498, 42.599731184385614, 24.637723185559593},
    {0.020309176209047357, 0.0, 4.0131308743759266, 0.0, 49.192999825533525, 0.0},
    {0.017588262526969552, 0.010154588104523679, 4.0129191718814498, -0.52317812748653498, 42.599731184385614, -24.637723185559593},
    {0.010154588104523679, 0.017588262526969552, 4.0124490470483502, -1.0466959409202444, 24.587294852901581, -42.676442581109602},
    {0.016285103278298917, -0.028206626284520209, 3.5399272344289801, 1.0460159720504163, 15.303796277528752, 26.637953683064490},
    {0.028206626284520209, -0.016285103278298917, 3.5410111067973441, 0.52262533874812910, 26.528250804768670, 15.376977276402439},
    {0.032570206556597833, 0.0, 3.5414930275055073, 0.0, 30.637099431803502, 0.0},
    {0.028206626284520209, 0.016285103278298917, 3.5410111067973441, -0.52262533874812910, 26.528250804768670, -15.376977276402439},
    {0.016285103278298917, 0.028206626284520209, 3.5399272344289801, -1.0460159720504163, 15.303796277528752, -26.637953683064490},
    {0.026116725371334210, -0.045235495270474005, 3.0671945511077655, 1.0444378601537727, 9.5021713252053184, 16.646934203897942},
    {0.045235495270474005, -0.026116725371334210, 3.0696601089336678, 0.52137390176335096, 16.492358959816638, 9.6071974822352944},
    {0.052233450742668419, 0.0, 3.0707389077788454, 0.0, 19.051597769543988, 0.0},
    {0.045235495270474005, 0.026116725371334210, 3.0696601089336678, -0.52137390176335096, 16.492358959816638, -9.6071974822352944},
    {0.026116725371334210, 0.045235495270474005, 3.0671945511077655, -1.0444378601537727, 9.5021713252053184, -16.646934203897942},
    {0.041883882003414595, -0.072545011648133815, 2.5940733621005554, 1.0408187352106227, 5.8662113160307221, 10.428803625546149},
    {0.072545011648133815, -0.041883882003414595, 2.5995866219653220, 0.51859249533586401, 10.215138041174394, 6.0148609558697418},
    {0.083767764006829190, 0.0, 2.6019493738769343, 0.0, 11.807967732534967, 0.0},
    {0.072545011648133815, 0.041883882003414595, 2.5995866219653220, -0.51859249533586401, 10.215138041174394, -6.0148609558697418},
    {0.041883882003414595, 0.072545011648133815, 2.5940733621005554, -1.0408187352106227, 5.8662113160307221, -10.428803625546149},
    {0.067169966629945007, -0.11634179494577079, 2.1203454311178615, 1.0326446441952628, 3.5733921904273130, 6.5641111394447358},
    {0.11634179494577079, -0.067169966629945007, 2.1323982360362733, 0.51255882186750469, 6.2762579637484977, 3.7800586543317423},
    {0.13433993325989001, 0.0, 2.1374236202406160, 0.0, 7.2670835538677134, 0.0},
    {0.11634179494577079, 0.067169966629945007, 2.1323982360362733, -0.51255882186750469, 6.2762579637484977, -3.7800586543317423},
    {0.067169966629945007, 0.11634179494577079, 2.1203454311178615, -1.0326446441952628, 3.5733921904273130, -6.5641111394447358},
    {0.10772173450159419, -0.18657951723620640, 1.6460474723963080, 1.0145553380300115, 2.1090597233397542, 4.1646464453168146},
    {0.18657951723620640, -0.10772173450159419, 1.6715931376833044, 0.49989532396039906, 3.7905430967985373, 2.3896177749832632},
    {0.21544346900318837, 0.0, 1.6818564610998595, 0.0, 4.4080635169621660, 0.0},
    {0.18657951723620640, 0.10772173450159419, 1.6715931376833044, -0.49989532396039906, 3.7905430967985373, -2.3896177749832632},
    {0.10772173450159419, 0.18657951723620640, 1.6460474723963080, -1.0145553380300115, 2.1090597233397542, -4.1646464453168146},
    {0.17275536472961097, -0.29922106899177862, 1.1727205740941275, 0.97566200688761889, 1.1517163868979556, 2.6698604962409793},
    {0.29922106899177862, -0.17275536472961097, 1.2245070184818793, 0.47452701854470878, 2.2088136111899212, 1.5200810483716805},
    {0.34551072945922193, 0.0, 1.2442827175088860, 0.0, 2.5979706544445205, 0.0},
    {0.29922106899177862, 0.17275536472961097, 1.2245070184818793, -0.47452701854470878, 2.2088136111899212, -1.5200810483716805},
    {0.17275536472961097, 0.29922106899177862, 1.1727205740941275, -0.97566200688761889, 1.1517163868979556, -2.6698604962409793},
    {0.27705101650047458, -0.47986643686742534, 0.70753337598725380, 0.89563700439115139, 0.50475628245064223, 1.7180973455018031},
    {0.47986643686742534, -0.27705101650047458, 0.80564143914867763, 0.42706068249137466, 1.1956413898748774, 0.96486444805751364},
    {0.55410203300094916, 0.0, 0.84059361513714821, 0.0, 1.4493780695015979, 0.0},
    {0.47986643686742534, 0.27705101650047458, 0.80564143914867763, -0.42706068249137466, 1.1956413898748774, -0.96486444805751364},
    {0.27705101650047458, 0.47986643686742534, 0.70753337598725380, -0.89563700439115139, 0.50475628245064223, -1.7180973455018031},
    {0.44431190813717018, -0.76957079930145444, 0.27439949789744174, 0.74260640806370497, 0.061630073193332649, 1.0671940035059195},
    {0.76957079930145444, -0.44431190813717018, 0.44085953728517529, 0.34701974771239801, 0.55489682652617264, 0.59135333871199592},
    {0.88862381627434037, 0.0, 0.49496548886509051, 0.0, 0.73132611756630553, 0.0},
    {0.76957079930145444, 0.44431190813717018, 0.44085953728517529, -0.34701974771239801, 0.55489682652617264, -0.59135333871199592},
    {0.44431190813717018, 0.76957079930145444, 0.27439949789744174, -0.74260640806370497, 0.061630073193332649, -1.0671940035059195},
    {0.71255133515149905, -1.2341751154834357, -0.064528861931593176, 0.48667158375055558, -0.20375014636690185, 0.55920806698121615},
    {1.2341751154834357, -0.71255133515149905, 0.16789407620642557, 0.23256739086866779, 0.18101906018311809, 0.32156194144491663},
    {1.4251026703029981, 0.0, 0.23574805798802151, 0.0, 0.30922123495708713, 0.0},
    {1.2341751154834357, 0.71255133515149905, 0.16789407620642557, -0.23256739086866779, 0.18101906018311809, -0.32156194144491663},
    {0.71255133515149905, 1.2341751154834357, -0.064528861931593176, -0.48667158375055558, -0.20375014636690185, -0.55920806698121615},
    {1.1427319320674952, -1.9792697657722485, -0.20004560916329868, 0.16079802289295158, -0.25049925637155364, 0.14495042281814576},
    {1.9792697657722485, -1.1427319320674952, 0.020385281188541271, 0.10792639289941475, 0.013747384764388022, 0.12915553576880137},
    {2.2854638641349904, 0.0, 0.080533419890770371, 0.0, 0.096750721925869914, 0.0},
    {1.9792697657722485, 1.1427319320674952, 0.020385281188541271, -0.10792639289941475, 0.013747384764388022, -0.12915553576880137},
    {1.1427319320674952, 1.9792697657722485, -0.20004560916329868, -0.16079802289295158, -0.25049925637155364, -0.14495042281814576},
    {1.8326206185398140, -3.1741920223092602, -0.088703671212862520, -0.052023007388548199, -0.089240622688938567, -0.065523470339309676},
    {3.1741920223092602, -1.8326206185398140, -0.012998543921569699, 0.023258198556500484, -0.015919117851412546, 0.025097656016416484},
    {3.6652412370796279, 0.0, 0.016255881796400805, 0.0, 0.018351913576701223, 0.0},
    {3.1741920223092602, 1.8326206185398140, -0.012998543921569699, -0.023258198556500484, -0.015919117851412546, -0.025097656016416484},
    {1.8326206185398140, 3.1741920223092602, -0.088703671212862520, 0.052023007388548199, -0.089240622688938567, 0.065523470339309676},
    {2.9390080361374564, -5.0905112424433015, 0.020930836781970381, -0.017133852881995651, 0.023058153176809685, -0.016406250949378657},
    {5.0905112424433015, -2.9390080361374564, -0.0031225286456623967, -0.00015590655183295377, -0.0033408382111859039, -0.00029170012713207927},
    {5.8780160722749128, 0.0, 0.0014193620420252588, 0.0, 0.0015356612594579367, 0.0},
    {5.0905112424433015, 2.9390080361374564, -0.0031225286456623967, 0.00015590655183295377, -0.0033408382111859039, 0.00029170012713207927},
    {2.9390080361374564, 5.0905112424433015, 0.020930836781970381, 0.017133852881995651, 0.023058153176809685, 0.016406250949378657},
    {4.7133422755894261, -8.1637482947831952, -0.0026662918180508730, 0.0024755260138014647, -0.0028492565900178309, 0.0024233114948598412},
    {8.1637482947831952, -4.7133422755894261, 2.9184939133004639e-5, -0.00011120090420212320, 3.3333405343275079e-5, -0.00011548941010733832},
    {9.4266845511788521, 0.0, 3.2466901310938194e-5, 0.0, 3.4147487383397772e-5, 0.0},
    {8.1637482947831952, 4.7133422755894261, 2.9184939133004639e-5, 0.00011120090420212320, 3.3333405343275079e-5, 0.00011548941010733832},
    {4.7133422755894261, 8.1637482947831952, -0.0026662918180508730, -0.0024755260138014647, -0.0028492565900178309, -0.0024233114948598412},
    {7.5588753530783110, -13.092356159611771, 8.4344650611146358e-5, 0.00014456995061069389, 8.1686834963517258e-5, 0.00014937142522610031},
    {13.092356159611771, -7.5588753530783110, 2.4548324717307912e-8, 6.5921427643827101e-7, 1.4633812221710032e-8, 6.7831178490826801e-7},
    {15.117750706156622, 0.0, 8.6952291991638730e-8, 0.0, 8.9783428062340221e-8, 0.0},
    {13.092356159611771, 7.5588753530783110, 2.4548324717307912e-8, -6.5921427643827101e-7, 1.4633812221710032e-8, -6.7831178490826801e-7},
    {7.5588753530783110, 13.092356159611771, 8.4344650611146358e-5, -0.00014456995061069389, 8.1686834963517258e-5, -0.00014937142522610031},
    {12.122310085411642, -20.996456973037581, -1.2271558633454981e-6, 6.3181533296669097e-7, -1.2510980950084002e-6, 6.1670042284193935e-7},
    {20.996456973037581, -12.122310085411642, 1.8955545540142268e-10, -3.5424581838816449e-11, 1.9327988993030138e-10, -3.4132234177136390e-11},
    {24.244620170823285, 0.0, 7.4860491420532231e-12, 0.0, 7.6389047211949798e-12, 0.0},
    {20.996456973037581, 12.122310085411642, 1.8955545540142268e-10, 3.5424581838816449e-11, 1.9327988993030138e-10, 3.4132234177136390e-11},
    {12.122310085411642, 20.996456973037581, -1.2271558633454981e-6, -6.3181533296669097e-7, -1.2510980950084002e-6, -6.1670042284193935e-7},
    {19.440775901540441, -33.672411600028689, -6.7606333334381872e-10, 2.5776338864460251e-10, -6.8328901482812747e-10, 2.5195011119291572e-10},
    {33.672411600028689, -19.440775901540441, 3.1409572400315503e-16, 3.5859034390980331e-16, 3.1530002693851925e-16, 3.6456677283205755e-16},
    {38.881551803080882, 0.0, 2.6047498982525572e-18, 0.0, 2.6380358153567108e-18, 0.0},
    {33.672411600028689, 19.440775901540441, 3.1409572400315503e-16, -3.5859034390980331e-16, 3.1530002693851925e-16, -3.6456677283205755e-16},
    {19.440775901540441, 33.672411600028689, -6.7606333334381872e-10, -2.5776338864460251e-10, -6.8328901482812747e-10, -2.5195011119291572e-10},
    {31.177536706369573, -54.001077630275733, -2.0081739710938140e-15, -4.1055690531895986e-15, -1.9878605297153414e-15, -4.1359828885599473e-15},
    {54.001077630275733, -31.177536706369573, 5.5897754487646010e-25, 1.2534875716408658e-26, 5.6280036069781380e-25, 1.4847546358489900e-26},
    {62.355073412739145, 0.0, 1.3161215454346086e-28, 0.0, 1.3266333396072465e-28, 0.0},
    {54.001077630275733, 31.177536706369573, 5.5897754487646010e-25, -1.2534875716408658e-26, 5.6280036069781380e-25, -1.4847546358489900e-26},
    {31.177536706369573, 54.001077630275733, -2.0081739710938140e-15, 4.1055690531895986e-15, -1.9878605297153414e-15, 4.1359828885599473e-15},
    {50.000000000000000, -86.602540378443865, 1.6133057413909386e-23, -1.7981631606712811e-23, 1.6251157010262180e-23, -1.7957012272072612e-23},
    {86.602540378443865, -50.000000000000000, 3.0660676475800711e-39, -1.3192515723256627e-41, 3.0793577900125217e-39, -5.6172024536323200e-42},
    {100.00000000000000, 0.0, 4.6566282291759020e-45, 0.0, 4.6798537356369093e-45, 0.0},
    {86.602540378443865, 50.000000000000000, 3.0660676475800711e-39, 1.3192515723256627e-41, 3.0793577900125217e-39, 5.6172024536323200e-42},
    {50.000000000000000, 86.602540378443865, 1.6133057413909386e-23, 1.7981631606712811e-23, 1.6251157010262180e-23, 1.7957012272072612e-23},
};

inline constexpr int bessel_extra_size = 154;
inline constexpr BesselRef bessel_extra[154] = {
    {1.0000000000000000e-8, 0.0, 18.536612259610778, 0.0, 99999999.999999905, 0.0},
    {8.6602540378443868e-9, 4.9999999999999994e-9, 18.536612259610778, -0.52359877559829838, 86602540.378443785, -50000000.000000039},
    {5.0000000000000013e-9, -8.6602540378443857e-9, 18.536612259610778, 1.0471975511965972, 49999999.999999961, 86602540.378443937},
    {2.6749882862458741e-9, 9.6355818541719296e-9, 18.536612259610778, -1.2999999999999997, 26749882.862458709, -96355818.541719386},
    {9.0671624464309656e-10, -9.9588084453764006e-9, 18.536612259610777, 1.4799999999999999, 9067162.4464309496, 99588084.453764100},
    {1.9231321691639751e-25, 1.0000000000000000e-8, 18.536612259610777, -1.5707963267948966, -5.9308494648105096e-9, -100000000.00000010},
    {1.9231321691639751e-25, -1.0000000000000000e-8, 18.536612259610777, 1.5707963267948966, -5.9308494648105096e-9, 100000000.00000010},
    {1.0000000000000000e-7, 0.0, 16.234027166616775, 0.0, 9999999.9999991633, 0.0},
    {8.6602540378443868e-8, 4.9999999999999994e-8, 16.234027166616755, -0.52359877559826214, 8660254.0378436491, -5000000.0000003950},
    {5.0000000000000013e-8, -8.6602540378443857e-8, 16.234027166616713, 1.0471975511965590, 4999999.9999995376, 8660254.0378450842},
    {2.6749882862458741e-8, 9.6355818541719296e-8, 16.234027166616697, -1.2999999999999750, 2674988.2862455876, -9635581.8541727185},
    {9.0671624464309656e-9, -9.9588084453764006e-8, 16.234027166616691, 1.4799999999999886, 906716.24464294700, 9958808.4453772271},
    {1.9231321691639751e-24, 1.0000000000000000e-7, 16.234027166616689, -1.5707963267948927, -7.8347503122828350e-8, -10000000.000000837},
    {1.9231321691639751e-24, -1.0000000000000000e-7, 16.234027166616689, 1.5707963267948927, -7.8347503122828350e-8, 10000000.000000837},
    {0.50000000000000000, 0.0, 0.92441907122766586, 0.0, 1.6564411200033009, 0.0},
    {0.43301270189221934, 0.24999999999999997, 0.89325039256520734, -0.43982997347942339, 1.3792407996779382, -1.0664961709929169},
    {0.25000000000000006, -0.43301270189221929, 0.80723099859552667, 0.91800191805086915, 0.62569889318244482, 1.8925398969429313},
    {0.13374941431229370, 0.48177909270859648, 0.75402159524151412, -1.1746609564898213, 0.15274128206520163, -2.1517725051306144},
    {0.045335812232154828, -0.49794042226882003, 0.71615988748253146, 1.3707357212717257, -0.20153812303718344, 2.2718797051969931},
    {9.6156608458198757e-18, 0.50000000000000000, 0.69824839378385420, -1.4741449260217836, -0.38055440341395674, -2.3113834293865156},
    {9.6156608458198757e-18, -0.50000000000000000, 0.69824839378385420, 1.4741449260217836, -0.38055440341395674, 2.3113834293865156},
    {1.0000000000000000, 0.0, 0.42102443824070833, 0.0, 0.60190723019723457, 0.0},
    {0.86602540378443868, 0.49999999999999994, 0.36238958839341486, -0.32126957559263306, 0.43914510255294280, -0.51609739281451815},
    {0.50000000000000013, -0.86602540378443857, 0.17721481061835241, 0.68881473211471077, -0.022125286872964477, 0.93106799319827165},
    {0.26749882862458741, 0.96355818541719296, 0.038890122844706534, -0.90871118079328045, -0.32851807259413656, -1.0844872598777543},
    {0.090671624464309656, -0.99588084453764006, -0.076643025435520864, 1.0953162623040742, -0.56751676871938462, 1.1805825951378449},
    {1.9231321691639751e-17, 1.0000000000000000, -0.13863371520405399, -1.2019697153172065, -0.69122984369208424, -1.2271262301435715},
    {1.9231321691639751e-17, -1.0000000000000000, -0.13863371520405399, 1.2019697153172065, -0.69122984369208424, 1.2271262301435715},
    {2.0000000000000000, 0.0, 0.11389387274953344, 0.0, 0.13986588181652243, 0.0},
    {1.7320508075688774, 0.99999999999999987, 0.048685391889020641, -0.14140495992546801, 0.043382934972387332, -0.17529605193727602},
    {1.0000000000000003, -1.7320508075688771, -0.18874048237789571, 0.25232927654975349, -0.26225464920758708, 0.24889435714042927},
    {0.53499765724917481, 1.9271163708343859, -0.41363275005058796, -0.29221104756386339, -0.51276111027732118, -0.22478048373246642},
    {0.18134324892861931, -1.9917616890752801, -0.64984262678107514, 0.32606566016069793, -0.75577213403380060, 0.18784059488600524},
    {3.8462643383279503e-17, 2.0000000000000000, -0.80169623188369418, -0.35168681347830044, -0.90591720959598958, -0.16812615031243094},
    {3.8462643383279503e-17, -2.0000000000000000, -0.80169623188369418, 0.35168681347830044, -0.90591720959598958, 0.16812615031243094},
    {2.8000000000000000, 0.0, 0.043819981975498529, 0.0, 0.051112685607272439, 0.0},
    {2.4248711305964283, 1.3999999999999998, -0.0047050792603712620, -0.063825556927311107, -0.010460877410369075, -0.072853840963349367},
    {1.4000000000000004, -2.4248711305964280, -0.17571378532175264, 0.040320478181778191, -0.19783123921223466, 0.019104107915648762},
    {0.74899672014884474, 2.6979629191681403, -0.34340152738352945, 0.058350885857873000, -0.35360565969474334, 0.11739697416235500},
    {0.25388054850006704, -2.7884663647053922, -0.54107512371549730, -0.19488816687503066, -0.52328263818291902, -0.29323575921383328},
    {5.3847700736591304e-17, 2.8000000000000000, -0.68473522903394862, 0.29065392153347752, -0.64356978000947869, 0.41397613626574529},
    {5.3847700736591304e-17, -2.8000000000000000, -0.68473522903394862, -0.29065392153347752, -0.64356978000947869, -0.41397613626574529},
    {2.9500000000000000, 0.0, 0.036808767597458819, 0.0, 0.042640246002127926, 0.0},
    {2.5547749411640941, 1.4749999999999998, -0.0081576353336597398, -0.054233723702371411, -0.013403378950151614, -0.061216262490027058},
    {1.4750000000000004, -2.5547749411640938, -0.16242746424875513, 0.015357078029116033, -0.17887310551253461, -0.0052836592672861733},
    {0.78912154444253285, 2.8424966469807192, -0.31031719794757353, 0.10095824924594089, -0.31150268365722135, 0.15434454663626586},
    {0.26748129216971348, -2.9378484913860382, -0.48621659179941697, -0.26372540283567629, -0.45630362023442619, -0.35010616993748469},
    {5.6732398990337267e-17, 2.9500000000000000, -0.61691470694827952, 0.38113242812971552, -0.56153539202348133, 0.48816074302220954},
    {5.6732398990337267e-17, -2.9500000000000000, -0.61691470694827952, -0.38113242812971552, -0.56153539202348133, -0.48816074302220954},
    {3.0000000000000000, 0.0, 0.034739504386279248, 0.0, 0.040156431128194184, 0.0},
    {2.5980762113533160, 1.4999999999999998, -0.0090476367947297159, -0.051315125231431965, -0.014118099648707478, -0.057716939720424266},
    {1.5000000000000004, -2.5980762113533157, -0.15765243364800324, 0.0079726969798187327, -0.17242291533488260, -0.012356006737505149},
    {0.80249648587376222, 2.8906745562515789, -0.29855313860167019, 0.11348457557624742, -0.29714616065447035, 0.16489415117756301},
    {0.27201487339292897, -2.9876425336129202, -0.46635248150788926, -0.28424366634129848, -0.43302153280303927, -0.36655875638311347},
    {5.7693965074919254e-17, 3.0000000000000000, -0.59195461148071111, 0.40848865553578912, -0.53259256661944416, 0.50999739386720529},
    {5.7693965074919254e-17, -3.0000000000000000, -0.59195461148071111, -0.40848865553578912, -0.53259256661944416, -0.50999739386720529},
    {3.0500000000000000, 0.0, 0.032790596353136338, 0.0, 0.037824329547309113, 0.0},
    {2.6413774815425380, 1.5249999999999998, -0.0098239330259673021, -0.048527803565156659, -0.014718431909008627, -0.054393229393475150},
    {1.5250000000000004, -2.6413774815425376, -0.15274373517281414, 0.0010389354536823960, -0.16593958072464900, -0.018929352987522065},
    {0.81587142730499159, 2.9388524655224385, -0.28649430831631783, 0.12518131368985727, -0.28268826531595871, 0.17458481154656868},
    {0.27654845461614445, -3.0374365758398022, -0.44580690742835701, -0.30352100940659477, -0.40935188928007706, -0.38175276890689564},
    {5.8655531159501242e-17, 3.0500000000000000, -0.56593971478448644, 0.43438009926641816, -0.50295464831908181, 0.53034929381641233},
    {5.8655531159501242e-17, -3.0500000000000000, -0.56593971478448644, -0.43438009926641816, -0.50295464831908181, -0.53034929381641233},
    {3.3000000000000000, 0.0, 0.024610632145839314, 0.0, 0.028116934272716612, 0.0},
    {2.8578838324886477, 1.6499999999999998, -0.012295121769239808, -0.036399545233522228, -0.016327839490798436, -0.040140431773393906},
    {1.6500000000000004, -2.8578838324886473, -0.12691903915989873, -0.027272876830533215, -0.13360727664790908, -0.044912319610159251},
    {0.88274613446113844, 3.1797420118767368, -0.22320977686640495, 0.17152595701142765, -0.21004255538739904, 0.21073045260087497},
    {0.29921636073222186, -3.2864067869742122, -0.33509797129632948, -0.38095970212586836, -0.28708408165740328, -0.43888234942552367},
    {6.3463361582411180e-17, 3.3000000000000000, -0.42268871740157212, 0.54081930116378718, -0.34661734140709504, 0.60923795938867789},
    {6.3463361582411180e-17, -3.3000000000000000, -0.42268871740157212, -0.54081930116378718, -0.34661734140709504, -0.60923795938867789},
    {5.0000000000000000, 0.0, 0.0036910983340425943, 0.0, 0.0040446134454521642, 0.0},
    {4.3301270189221934, 2.4999999999999997, -0.0066857187245718250, -0.0027524012124872052, -0.0073764501638344377, -0.0026735302528643689},
    {2.5000000000000006, -4.3301270189221929, 0.0055142249201262893, -0.045063634341104799, 0.0095145558839416321, -0.046937729979318659},
    {1.3374941431229370, 4.8177909270859648, 0.097601432486464848, 0.10844384441897662, 0.11067848490047899, 0.10261482766221353},
    {0.45335812232154828, -4.9794042226882003, 0.29508166877807769, -0.19664288248808203, 0.31831973270979281, -0.17040984267842595},
    {9.6156608458198757e-17, 5.0000000000000000, 0.48461835249266666, 0.27896835603119585, 0.51456010606331356, 0.23226288250728620},
    {9.6156608458198757e-17, -5.0000000000000000, 0.48461835249266666, -0.27896835603119585, 0.51456010606331356, -0.23226288250728620},
    {8.0000000000000000, 0.0, 0.00014647070522281539, 0.0, 0.00015536921180500113, 0.0},
    {6.9282032302755095, 3.9999999999999995, -0.00018934142556226553, 0.00038441524906818030, -0.00018796501035408698, 0.00041048926966499167},
    {4.0000000000000010, -6.9282032302755086, 0.0032446990980175323, 0.0073668202799171777, 0.0029620483845904608, 0.0077728653636053673},
    {2.1399906289966993, 7.7084654833375437, -0.024415557771002614, -0.045774743758877254, -0.027564803667482668, -0.045165312889636887},
    {0.72537299571447725, -7.9670467563011205, -0.15906193163060235, 0.14321075068218463, -0.16908581883740299, 0.13447180720005958},
    {1.5385057353311801e-16, 8.0000000000000000, -0.35110673448971343, -0.26962845734304886, -0.36856591177070233, -0.24828079269894886},
    {1.5385057353311801e-16, -8.0000000000000000, -0.35110673448971343, 0.26962845734304886, -0.36856591177070233, 0.24828079269894886},
    {11.000000000000000, 0.0, 6.2430205476536771e-6, 0.0, 6.5208606745808861e-6, 0.0},
    {9.5262794416288255, 5.4999999999999993, 2.3591166327042642e-5, 1.3716951907629665e-5, 2.4808382452306038e-5, 1.3732871171901975e-5},
    {5.5000000000000014, -9.5262794416288243, -0.0012533432408992527, -0.00088666445433080326, -0.0012482488141975776, -0.00095542538223682992},
    {2.9424871148704615, 10.599140039589123, 0.0047766962493341135, 0.019276170853248707, 0.0056716372307417544, 0.019319809672867918},
    {0.99738786910740621, -10.954689289914041, 0.088364653856010651, -0.10751650406554849, 0.093653334793180737, -0.10408883842266034},
    {2.1154453860803727e-16, 11.000000000000000, 0.26522475615882667, 0.26890509506253846, 0.27769369823255574, 0.25714805684737670},
    {2.1154453860803727e-16, -11.000000000000000, 0.26522475615882667, -0.26890509506253846, 0.27769369823255574, -0.25714805684737670},
    {14.000000000000000, 0.0, 2.7613708239816199e-7, 0.0, 2.8583436534402497e-7, 0.0},
    {12.124355652982142, 6.9999999999999991, 1.0130714902987880e-6, -1.4923279349748504e-6, 1.0181978068374115e-6, -1.5555850729817077e-6},
    {7.0000000000000018, -12.124355652982140, 0.00030320888830699330, 2.2516807841238157e-5, 0.00030802297355256058, 3.2136880770258208e-5},
    {3.7449836007442237, 13.489814595840702, 4.5618087100023403e-5, -0.0078961409320000914, -0.00022284342473887805, -0.0079771713488362075},
    {1.2694027425003352, -13.942331823526961, -0.048044256770770223, 0.080817005237334133, -0.051090949172657470, 0.079426794791043942},
    {2.6923850368295652e-16, 14.000000000000000, -0.19979361952450205, -0.26872158788634289, -0.20950520308656548, -0.26176510546699177},
    {2.6923850368295652e-16, -14.000000000000000, -0.19979361952450205, 0.26872158788634289, -0.20950520308656548, 0.26176510546699177},
    {14.900000000000000, 0.0, 1.0888050268169330e-7, 0.0, 1.1247664144060681e-7, 0.0},
    {12.903778516388136, 7.4499999999999991, 1.1683888509574200e-7, -7.9373874843018741e-7, 1.0724344523392317e-7, -8.1849105532854410e-7},
    {7.4500000000000019, -12.903778516388135, 0.00012349621717444459, 0.00014171438267517226, 0.00012154895210399421, 0.00014765609295761433},
    {3.9857325465063524, 14.357016962716175, -0.0045678200612809554, -0.0039172299664693937, -0.0047363307905348752, -0.0038079017941791743},
    {1.3510072045182139, -14.838624583610837, -0.083206712066731872, 0.011524135998093226, -0.083888385763084152, 0.0087960911583287158},
    {2.8654669320543230e-16, 14.900000000000000, -0.32444238095028908, -0.010039815237096550, -0.32496033078042012, 0.00082981254958037716},
    {2.8654669320543230e-16, -14.900000000000000, -0.32444238095028908, 0.010039815237096550, -0.32496033078042012, -0.00082981254958037716},
    {15.000000000000000, 0.0, 9.8195364823964345e-8, 0.0, 1.0141729369762092e-7, 0.0},
    {12.990381056766580, 7.4999999999999991, 7.0381938285618861e-8, -7.2992734265124047e-7, 6.0555192619210450e-8, -7.5193845882619851e-7},
    {7.5000000000000019, -12.990381056766579, 0.00010501805150805632, 0.00014398512503148364, 0.00010270622277216127, 0.00014940123149025208},
    {4.0124824293688111, 14.453372781257894, -0.0047777925832271192, -0.0033568532710204894, -0.0049293162735685334, -0.0032363060136510544},
    {1.3600743669646448, -14.938212668064601, -0.082905697375151813, 0.0031504221110753951, -0.083304630364816510, 0.00042061052728858865},
    {2.8846982537459627e-16, 15.000000000000000, -0.32274256150543194, 0.022343749666901049, -0.32217667046492010, 0.033102377512562848},
    {2.8846982537459627e-16, -15.000000000000000, -0.32274256150543194, -0.022343749666901049, -0.32217667046492010, -0.033102377512562848},
    {15.100000000000000, 0.0, 8.8560735880478718e-8, 0.0, 9.1447581552770118e-8, 0.0},
    {13.076983597145024, 7.5499999999999990, 3.0889755686321978e-8, -6.6956641886605871e-7, 2.0977195927801763e-8, -6.8908238704135355e-7},
    {7.5500000000000019, -13.076983597145022, 8.7380655701516734e-5, 0.00014461693583898328, 8.4769483510041470e-5, 0.00014951046166746214},
    {4.0392323122312698, 14.549728599799614, -0.0049283614430926934, -0.0027960568649089147, -0.0050625538582290094, -0.0026663149304921886},
    {1.3691415294110758, -15.037800752518365, -0.081788945913028808, -0.0050495277788842938, -0.081911699050365357, -0.0077536179782958674},
    {2.9039295754376025e-16, 15.100000000000000, -0.31784000122418362, 0.054289629313632378, -0.31621735476392845, 0.064832315615941121},
    {2.9039295754376025e-16, -15.100000000000000, -0.31784000122418362, -0.054289629313632378, -0.31621735476392845, -0.064832315615941121},
    {18.000000000000000, 0.0, 4.4687533373093829e-9, 0.0, 4.5912496277402409e-9, 0.0},
    {15.588457268119896, 8.9999999999999989, -4.9185799721998597e-8, -8.2555487485235156e-9, -5.0471642694395148e-8, -7.7848776738453740e-9},
    {9.0000000000000023, -15.588457268119894, -3.3484048311879389e-5, -1.4087611900813052e-5, -3.3620671268154885e-5, -1.5080064315673829e-5},
    {4.8149789152425733, 17.344047337509473, 0.0015556450322724559, 0.0018146387959584515, 0.0016158784162089842, 0.0017873850778644640},
    {1.6320892403575738, -17.925855201677521, 0.056666672245105481, -0.010931706054024463, 0.057131909580504580, -0.0094007869541772193},
    {3.4616379044951553e-16, 18.000000000000000, 0.29460624340005386, 0.020979250569478899, 0.29530167558088683, 0.012810051827156736},
    {3.4616379044951553e-16, -18.000000000000000, 0.29460624340005386, -0.020979250569478899, 0.29530167558088683, -0.012810051827156736},
    {30.000000000000000, 0.0, 2.1324774964630564e-14, 0.0, 2.1677320018915494e-14, 0.0},
    {25.980762113533160, 14.999999999999998, -1.0702439803599836e-12, -5.1459888492389816e-13, -1.0898461206915533e-12, -5.1319608956127436e-13},
    {15.000000000000004, -25.980762113533157, 1.4063449992445661e-8, 6.8419081147562716e-8, 1.3202230581946691e-8, 6.9194983035648365e-8},
    {8.0249648587376222, 28.906745562515789, -2.1553048045881416e-5, 7.1607884209036930e-5, -2.0506995669852300e-5, 7.2279929054824809e-5},
    {2.7201487339292897, -29.876425336129202, 0.010456311999944840, -0.010844839687668134, 0.010653210116564324, -0.010689447782834601},
    {5.7693965074919254e-16, 30.000000000000000, 0.18424770448213151, 0.13566651136177983, 0.18653373296118196, 0.13261537628303547},
    {5.7693965074919254e-16, -30.000000000000000, 0.18424770448213151, -0.13566651136177983, 0.18653373296118196, -0.13261537628303547},
    {100.00000000000000, 0.0, 4.6566282291759020e-45, 0.0, 4.6798537356369093e-45, 0.0},
    {86.602540378443868, 49.999999999999994, 3.0660676475800598e-39, 1.3192515723276095e-41, 3.0793577900125105e-39, 5.6172024536519010e-42},
    {50.000000000000013, -86.602540378443857, 1.6133057413909049e-23, -1.7981631606712703e-23, 1.6251157010261842e-23, -1.7957012272072505e-23},
    {26.749882862458741, 96.355818541719296, -2.8029432660176590e-13, -1.1350146175188790e-13, -2.8121828057997768e-13, -1.1230590491919715e-13},
    {9.0671624464309656, -99.588084453764006, 1.4160484028521048e-5, -2.9313227043385441e-6, 1.4181666665334481e-5, -2.8622104656003019e-6},
    {1.9231321691639751e-15, 100.00000000000000, 0.12133508369966632, -0.031393700245746286, 0.12117963557306642, -0.032000752862254604},
    {1.9231321691639751e-15, -100.00000000000000, 0.12133508369966632, 0.031393700245746286, 0.12117963557306642, 0.032000752862254604},
    {300.00000000000000, 0.0, 3.7236948548891433e-132, 0.0, 3.7298958583323727e-132, 0.0},
    {259.80762113533160, 149.99999999999998, 9.1410850544950710e-115, 5.4157122185976035e-115, 9.1587793308066916e-115, 5.4159187470270411e-115},
    {150.00000000000004, -259.80762113533157, -4.7368644937816262e-67, 2.1229178562800669e-67, -4.7438767630367557e-67, 2.1178570414273417e-67},
    {80.249648587376222, 289.06745562515789, 7.8428483255117433e-37, -6.4799820343729396e-37, 7.8359524813659234e-37, -6.4954681315932626e-37},
    {27.201487339292897, -298.76425336129202, -5.5075167085393972e-14, -9.6580139237513130e-14, -5.4923285979642353e-14, -9.6686265959069682e-14},
    {5.7693965074919254e-15, 300.00000000000000, 0.050001415462829242, 0.052305247687278935, 0.050088660078700963, 0.052221984871236763},
    {5.7693965074919254e-15, -300.00000000000000, 0.050001415462829242, -0.052305247687278935, 0.050088660078700963, -0.052221984871236763},
    {700.00000000000000, 0.0, 4.6697764316853769e-306, 0.0, 4.6731107967079661e-306, 0.0},
    {606.21778264910708, 349.99999999999996, -6.4738861661009561e-267, 2.5018461338322003e-265, -6.3885935522008474e-267, 2.5034165373978018e-265},
    {350.00000000000009, -606.21778264910700, -4.3062620632814403e-154, -1.8913529824089801e-154, -4.3066310083284863e-154, -1.8946915636310474e-154},
    {187.24918003721118, 674.49072979203508, -2.1582899596919240e-83, -6.7204487208325052e-84, -2.1591652669164956e-83, -6.7068825550432066e-84},
    {63.470137125016759, -697.11659117634804, 1.1768818316618947e-29, 5.2958315436833751e-30, 1.1765816571811235e-29, 5.3045469844395092e-30},
    {1.3461925184147826e-14, 700.00000000000000, -0.046329550951904057, 0.0098775952900153753, -0.046322507349021897, 0.0099106903293124392},
    {1.3461925184147826e-14, -700.00000000000000, -0.046329550951904057, -0.0098775952900153753, -0.046322507349021897, -0.0099106903293124392},
};

// Quintic C^4 ramp: monomial coefficients of H on [0,1] (degree 10),
// its exact antiderivative coefficients (degree 11), and sample values
// (t, H(t), int_0^t H).  For t >= 1: H = 1 and the integral grows linearly.
inline constexpr double ramp_mono[11] = {
    0.0,
    0.0,
    0.0,
    0.0,
    0.0,
    252.00000000000000,
    -1050.0000000000000,
    1800.0000000000000,
    -1575.0000000000000,
    700.00000000000000,
    -126.00000000000000,
};
inline constexpr double ramp_anti[12] = {
    0.0,
    0.0,
    0.0,
    0.0,
    0.0,
    0.0,
    42.000000000000000,
    -150.00000000000000,
    225.00000000000000,
    -175.00000000000000,
    70.000000000000000,
    -11.454545454545455,
};
inline constexpr double ramp_int_0_1 = 0.54545454545454545;

struct RampRef { double t, h, ih; };
inline constexpr int ramp_table_size = 18;
inline constexpr RampRef ramp_table[18] = {
    {0.0, 0.0, 0.0},
    {0.062500000000000000, 0.00018408993673801888, 1.9945048589678746e-6},
    {0.12500000000000000, 0.0044545251876115799, 0.00010086276399141008},
    {0.18750000000000000, 0.025227560910934699, 0.00090012350197164117},
    {0.25000000000000000, 0.078126907348632813, 0.0039283145557750355},
    {0.31250000000000000, 0.17252944530810055, 0.011539566231859184},
    {0.37500000000000000, 0.30572812445461750, 0.026311460607261820},
    {0.43750000000000000, 0.46308061308991455, 0.050263756135781147},
    {0.50000000000000000, 0.62304687500000000, 0.084250710227272727},
    {0.56250000000000000, 0.76437856289157935, 0.12775149917211531},
    {0.62500000000000000, 0.87249209173023701, 0.17909868884916333},
    {0.68750000000000000, 0.94281964177389455, 0.23601893460102019},
    {0.75000000000000000, 0.98027229309082031, 0.29626217755404386},
    {0.81250000000000000, 0.99545116369154130, 0.35808866012275137},
    {0.87500000000000000, 0.99948996491730213, 0.42046421764164486},
    {0.93750000000000000, 0.99998995324313000, 0.48295463773616699},
    {1.0000000000000000, 1.0000000000000000, 0.54545454545454545},
    {1.2500000000000000, 1.0000000000000000, 0.79545454545454545},
};

}  // namespace refdata
