//! Frozen reference data computed offline in 60-digit arithmetic,
//! plus tiny comparison helpers shared by the integration tests.
#![allow(dead_code)]

/// Componentwise relative error |(want - got)/want|; NaN-free for want = 0.
pub fn rel_err(got: f64, want: f64) -> f64 {
    if want == 0.0 {
        got.abs()
    } else {
        ((want - got) / want).abs()
    }
}

/// Max componentwise relative error between two complex values given as parts.
pub fn rel_err_parts(got: (f64, f64), want: (f64, f64)) -> f64 {
    rel_err(got.0, want.0).max(rel_err(got.1, want.1))
}

pub const W_REFS: [(f64, f64, f64, f64); 24] = [
    (0.5, 0.5, 0.533156707912175, 0.2304882313844584),
    (1.0, 1.0, 0.3047442052569126, 0.20821893820283163),
    (5.0, 0.2, 0.0048070373359642435, 0.11504012013114057),
    (3.0, 0.05, 0.00404434342804465, 0.2010344620449225),
    (2.0, 0.0, 0.01831563888873418, 0.3400262170660662),
    (0.0, 0.5, 0.6156903441929259, 0.0),
    (0.0, 10.0, 0.05614099274382259, 0.0),
    (9.0, 2.0, 0.013500451659066343, 0.06002589662712968),
    (1.0, 2.0, 0.2184926152748907, 0.09299780939260187),
    (2.0, 1.0, 0.14023958136627795, 0.2222134401798991),
    (1.0, 0.01, 0.36870241739776605, 0.5998519944957883),
    (4.0, 0.05, 0.001962170887009435, 0.14592594097867062),
    (3.0, 0.01, 0.0009088307067415805, 0.2011464625401964),
    (7.99, 0.05, 0.00045267135994057477, 0.07117563053325145),
    (8.01, 0.05, 0.0004503578374236501, 0.07099504023824318),
    (1.0, 0.5, 0.3549003328675779, 0.3428717191311007),
    (6.0, 6.0, 0.047335271133396015, 0.04668274486973197),
    (0.1, 0.9, 0.45473063069245523, 0.030566362199109652),
    (3.0, 4.0, 0.09093390419476534, 0.06559233052791427),
    (5.5, 0.1002, 0.001969450995344813, 0.10432952968247428),
    (0.004002, 0.0995, 0.8969188728846815, 0.003801421617748939),
    (20.0, 20.0, 0.014113538470519282, 0.01409590764933707),
    (100.0, 0.001, 5.64274233093359e-08, 0.005642177972029779),
    (0.0, 0.0, 1.0, 0.0),
];

pub const REF_A: [f64; 23] = [
    0.27077258438525037,
    0.626170675358642,
    0.47654595853914944,
    0.006175066787250832,
    -0.261412717027354,
    -0.21281367137605198,
    -0.07389136199122473,
    -0.0009419634234851414,
    0.010291521810608873,
    0.004552179187584714,
    0.0008740493334945451,
    9.157365269051624e-06,
    -3.682871603569588e-05,
    -9.266248944643097e-06,
    -1.0162951859869945e-06,
    -7.969362463940677e-09,
    1.3515163480400673e-08,
    1.9624132868527643e-09,
    1.2433900034106132e-10,
    6.906225596365755e-13,
    -5.306901020897056e-13,
    -4.4757735291968213e-14,
    -1.64682930047236e-15,
];
pub const REF_B: [f64; 23] = [
    1.0437685074534264,
    0.006695687257637589,
    -0.5988128062272093,
    -0.530345507847728,
    -0.20608641675794823,
    -0.002275820514991661,
    0.03891415445685349,
    0.020222610023102893,
    0.004609236064796398,
    4.868889769921077e-05,
    -0.00028645156016501725,
    -8.735766924657534e-05,
    -1.1677373541502258e-05,
    -9.913402805558277e-08,
    2.3884666852653027e-07,
    4.275140134825596e-08,
    3.351198644068815e-09,
    2.1001658135846698e-11,
    -2.255842570214724e-11,
    -2.3702006339588375e-12,
    -1.089421636402234e-13,
    -4.791943697689569e-16,
    2.4133319338475724e-16,
];
pub const REF_C: [f64; 23] = [
    0.2608695652173913,
    0.5217391304347826,
    0.782608695652174,
    1.0434782608695652,
    1.3043478260869565,
    1.565217391304348,
    1.8260869565217392,
    2.0869565217391304,
    2.347826086956522,
    2.608695652173913,
    2.8695652173913047,
    3.130434782608696,
    3.3913043478260874,
    3.6521739130434785,
    3.9130434782608696,
    4.173913043478261,
    4.434782608695652,
    4.695652173913044,
    4.9565217391304355,
    5.217391304347826,
    5.478260869565218,
    5.739130434782609,
    6.0,
];
pub const REF_ALPHA: [f64; 23] = [
    1.0310739601687957,
    2.3843930856198354,
    1.8146376590855509,
    0.023514014836814996,
    -0.9954325545764557,
    -0.8103724216465369,
    -0.2813706542836699,
    -0.003586899167033568,
    0.03918904926626703,
    0.017334226923294883,
    0.0033282893455228555,
    3.487029860910679e-05,
    -0.00014023993668734754,
    -3.52849163697812e-05,
    -3.8699468208538965e-06,
    -3.0346506956645444e-08,
    5.146434290496245e-08,
    7.472666569095101e-09,
    4.73470036769612e-10,
    2.6298191863222585e-12,
    -2.0208129505662813e-12,
    -1.7043282088712875e-13,
    -6.270955430791161e-15,
];
pub const REF_BETA: [f64; 23] = [
    1.3248541279549384,
    0.00849882789088869,
    -0.7600723843814556,
    -0.6731669237929871,
    -0.26158524424477564,
    -0.0028886962791467175,
    0.049393690075803375,
    0.02566853490578825,
    0.005850497867638301,
    6.180076007442999e-05,
    -0.0003635926254085505,
    -0.00011088298591439513,
    -1.4822076379633788e-05,
    -1.2583070417661542e-07,
    3.0316779294069485e-07,
    5.426430300170989e-08,
    4.253672462320071e-09,
    2.6657379750860555e-11,
    -2.8633382975475633e-11,
    -3.0084928521584986e-12,
    -1.382801590356783e-13,
    -6.082408449265229e-16,
    3.0632393599268437e-16,
];
pub const REF_GAMMA: [f64; 23] = [
    0.06805293005671077,
    0.2722117202268431,
    0.612476370510397,
    1.0888468809073724,
    1.7013232514177694,
    2.449905482041588,
    3.3345935727788283,
    4.355387523629489,
    5.512287334593574,
    6.805293005671078,
    8.234404536862005,
    9.799621928166353,
    11.500945179584123,
    13.338374291115313,
    15.311909262759924,
    17.421550094517958,
    19.667296786389414,
    22.049149338374296,
    24.567107750472598,
    27.22117202268431,
    30.011342155009455,
    32.93761814744802,
    36.0,
];

pub const DAW_0_5: f64 = 0.4244363835020223;
pub const DAW_1_0: f64 = 0.5380795069127684;
pub const DAW_2_0: f64 = 0.30134038892379195;
pub const DAW_5_0: f64 = 0.10213407442427684;
pub const DAW_8_0: f64 = 0.06300019870755338;
pub const DAW_0_9241: f64 = 0.5410442238175845;

pub const E_ERFC_1: f64 = 0.427583576155807;
pub const EXP100_ERFC_10: f64 = 0.05614099274382259;
pub const ERF_1P2I_RE: f64 = -0.536643565778565;
pub const ERF_1P2I_IM: f64 = -5.049143703447035;
pub const FRESNEL_1_RE: f64 = 0.7798934003768229;
pub const FRESNEL_1_IM: f64 = 0.43825914739035476;
pub const FRESNEL_HALF_RE: f64 = 0.4923442258714464;
pub const FRESNEL_HALF_IM: f64 = 0.06473243285999927;
pub const PHI_1: f64 = 0.3413447460685429;
