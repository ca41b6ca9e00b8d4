"""Frozen Monte Carlo quantiles of the trimmed supLM limit process.

Generated by tools/simulate_suplm_quantiles.py with reps=100000,
steps=1000, seed=20260810. Do not edit by hand.
"""

SURVIVAL = (0.9, 0.8, 0.7, 0.6, 0.5, 0.4, 0.3, 0.25, 0.2, 0.15, 0.1, 0.075, 0.05, 0.04, 0.03, 0.025, 0.02, 0.015, 0.01, 0.0075, 0.005, 0.004, 0.003, 0.002, 0.0015, 0.001, 0.0005)

QUANTILES = {
    0.05: {
        1: (2.0255, 2.5664, 3.0556, 3.5428, 4.0695, 4.6701, 5.4089, 5.8426, 6.3655, 7.0533, 7.9950, 8.6566, 9.5802, 10.1148, 10.7492, 11.1815, 11.6515, 12.2263, 13.0750, 13.7884, 14.6372, 15.1003, 15.7188, 16.7409, 17.2356, 17.8685, 19.2297),
        2: (3.6816, 4.4412, 5.1042, 5.7293, 6.3820, 7.0967, 7.9648, 8.4742, 9.0864, 9.8479, 10.8764, 11.6277, 12.6463, 13.1734, 13.8664, 14.2967, 14.8122, 15.4345, 16.4130, 17.0519, 17.9268, 18.4193, 19.0932, 19.9595, 20.4269, 21.2700, 22.9466),
        3: (5.1831, 6.1027, 6.8618, 7.5806, 8.3312, 9.1500, 10.1087, 10.6723, 11.3278, 12.1559, 13.2868, 14.0457, 15.1119, 15.6583, 16.3766, 16.8715, 17.4133, 18.0915, 19.0662, 19.7945, 20.7047, 21.3199, 22.0428, 22.9713, 23.6955, 24.5257, 26.1937),
        4: (6.5911, 7.6317, 8.4878, 9.2902, 10.1133, 10.9923, 11.9982, 12.6167, 13.3304, 14.2136, 15.3905, 16.1965, 17.3030, 17.9063, 18.6392, 19.1001, 19.6758, 20.3806, 21.4465, 22.2251, 23.1976, 23.7051, 24.3147, 25.2345, 25.7981, 26.7255, 28.0637),
        5: (7.9655, 9.0932, 10.0203, 10.9042, 11.7678, 12.7186, 13.8129, 14.4538, 15.1887, 16.1159, 17.3663, 18.2161, 19.3636, 20.0131, 20.7693, 21.2825, 21.8790, 22.6138, 23.7137, 24.4446, 25.4746, 26.0952, 26.7323, 27.6398, 28.2807, 29.3238, 30.9798),
        6: (9.2946, 10.5216, 11.5121, 12.4279, 13.3515, 14.3549, 15.4988, 16.1821, 16.9719, 17.9460, 19.2349, 20.1318, 21.3510, 21.9981, 22.7881, 23.2992, 23.8802, 24.6405, 25.7592, 26.4799, 27.5456, 28.0377, 28.9076, 29.9304, 30.6462, 31.6223, 33.5780),
        7: (10.6106, 11.9123, 12.9660, 13.9249, 14.9115, 15.9483, 17.1594, 17.8652, 18.6792, 19.6719, 21.0203, 21.9328, 23.1505, 23.7990, 24.6316, 25.1831, 25.8755, 26.6643, 27.7176, 28.4401, 29.4600, 29.9947, 30.7548, 31.8198, 32.5777, 33.5690, 35.3642),
        8: (11.9016, 13.2772, 14.3633, 15.3932, 16.4098, 17.5055, 18.7632, 19.5010, 20.3380, 21.3936, 22.7550, 23.6995, 24.9690, 25.6371, 26.5577, 27.1085, 27.7205, 28.5380, 29.6633, 30.3707, 31.5229, 32.1515, 32.9856, 34.0252, 34.5936, 35.7614, 37.8529),
        9: (13.1334, 14.5847, 15.7535, 16.8112, 17.8794, 19.0319, 20.3381, 21.0991, 21.9699, 23.0192, 24.4583, 25.4161, 26.7317, 27.4204, 28.2890, 28.8288, 29.4114, 30.2522, 31.4510, 32.2901, 33.5409, 34.1746, 34.9317, 36.0935, 36.8178, 38.1275, 40.2177),
        10: (14.3817, 15.9125, 17.1078, 18.2099, 19.3251, 20.5041, 21.8587, 22.6336, 23.5493, 24.6671, 26.1525, 27.1311, 28.5126, 29.2231, 30.1433, 30.6425, 31.3396, 32.2108, 33.4275, 34.2937, 35.4414, 36.0427, 36.7900, 37.9936, 38.8497, 40.0966, 41.7558),
        11: (15.6250, 17.2161, 18.4560, 19.6121, 20.7613, 21.9762, 23.3402, 24.1612, 25.0821, 26.2211, 27.7534, 28.7870, 30.1796, 30.9280, 31.8638, 32.4375, 33.1477, 33.9653, 35.2455, 36.0722, 37.2546, 37.8709, 38.6538, 39.9878, 40.6334, 41.6099, 43.7000),
        12: (16.8459, 18.4891, 19.7875, 20.9756, 22.1527, 23.4152, 24.8332, 25.6516, 26.6009, 27.7549, 29.3253, 30.3647, 31.7630, 32.5437, 33.5026, 34.1206, 34.8554, 35.7729, 37.0865, 37.9459, 39.1351, 39.8055, 40.5112, 41.5626, 42.3679, 43.5579, 45.3084),
        13: (18.0677, 19.7584, 21.0985, 22.3373, 23.5421, 24.8389, 26.2976, 27.1277, 28.1114, 29.2986, 30.8755, 31.9692, 33.4757, 34.2724, 35.2896, 35.8783, 36.6672, 37.5580, 38.7787, 39.5355, 40.7880, 41.4794, 42.1759, 43.5553, 44.3792, 45.5881, 47.4118),
        14: (19.2712, 21.0111, 22.4059, 23.6687, 24.9241, 26.2304, 27.7250, 28.5776, 29.5805, 30.8034, 32.4383, 33.5653, 35.0736, 35.8921, 36.8795, 37.4843, 38.2529, 39.2520, 40.3970, 41.3565, 42.4709, 43.1893, 44.2257, 45.3452, 46.1651, 47.3650, 49.1265),
        15: (20.4579, 22.2530, 23.6972, 25.0100, 26.2685, 27.6182, 29.1571, 30.0364, 31.0407, 32.2845, 33.9734, 35.0798, 36.6252, 37.4045, 38.4438, 39.1251, 39.8808, 40.7933, 42.0846, 42.9529, 44.2715, 44.9897, 45.9220, 47.0579, 48.0018, 49.1627, 51.2883),
    },
    0.1: {
        1: (1.7073, 2.2003, 2.6512, 3.1153, 3.6184, 4.1960, 4.9056, 5.3495, 5.8635, 6.5171, 7.4700, 8.1157, 9.0410, 9.5555, 10.2244, 10.6248, 11.1536, 11.7631, 12.5626, 13.1887, 14.1176, 14.5625, 15.2270, 16.1625, 16.7409, 17.5027, 19.0258),
        2: (3.2148, 3.9349, 4.5632, 5.1759, 5.8156, 6.5298, 7.3861, 7.9057, 8.5090, 9.2790, 10.2927, 11.0134, 12.0309, 12.5887, 13.2671, 13.7129, 14.2279, 14.9093, 15.7888, 16.5091, 17.4282, 17.8565, 18.4410, 19.3489, 19.9989, 20.6748, 22.3532),
        3: (4.6041, 5.4950, 6.2405, 6.9536, 7.6904, 8.5171, 9.4708, 10.0391, 10.7042, 11.5310, 12.6497, 13.4263, 14.4766, 15.0933, 15.7882, 16.2442, 16.8344, 17.5294, 18.5006, 19.1945, 20.1845, 20.6550, 21.3864, 22.3905, 23.0663, 24.0290, 25.6768),
        4: (5.9262, 6.9428, 7.7869, 8.5955, 9.4064, 10.2925, 11.3181, 11.9208, 12.6622, 13.5481, 14.7322, 15.5455, 16.6532, 17.2599, 18.0444, 18.5091, 19.0572, 19.7834, 20.7833, 21.5222, 22.5351, 23.0449, 23.8140, 24.8299, 25.4200, 26.1391, 27.6878),
        5: (7.2239, 8.3457, 9.2720, 10.1337, 11.0166, 11.9577, 13.0903, 13.7362, 14.4958, 15.4226, 16.6685, 17.5201, 18.7177, 19.3094, 20.1373, 20.5832, 21.1923, 22.0087, 23.0375, 23.8686, 24.8717, 25.4616, 26.1424, 27.0220, 27.7169, 28.6134, 30.5571),
        6: (8.4834, 9.7158, 10.6998, 11.6244, 12.5630, 13.5784, 14.7532, 15.4303, 16.2251, 17.1983, 18.5177, 19.3925, 20.6376, 21.2993, 22.1296, 22.6266, 23.2693, 24.0380, 25.1524, 25.9160, 26.9498, 27.5467, 28.2265, 29.3784, 30.0807, 30.9946, 33.1020),
        7: (9.7484, 11.0555, 12.0827, 13.0711, 14.0607, 15.1392, 16.3638, 17.0747, 17.9018, 18.9028, 20.2493, 21.1985, 22.4566, 23.0997, 23.9238, 24.4856, 25.1436, 26.0335, 27.1061, 27.8382, 28.9051, 29.4341, 30.0981, 31.1621, 31.9685, 33.0198, 34.8296),
        8: (10.9751, 12.3505, 13.4563, 14.4875, 15.5369, 16.6440, 17.9138, 18.6572, 19.5304, 20.5720, 21.9695, 22.9102, 24.2165, 24.9030, 25.7719, 26.3386, 26.9859, 27.8084, 28.9493, 29.7849, 30.8534, 31.4583, 32.2480, 33.4197, 34.1250, 35.2867, 37.4593),
        9: (12.1739, 13.6225, 14.7775, 15.8822, 16.9654, 18.1267, 19.4513, 20.2411, 21.1290, 22.2069, 23.6596, 24.6384, 25.9375, 26.6708, 27.5466, 28.0978, 28.7227, 29.4910, 30.6821, 31.6194, 32.8436, 33.5143, 34.2638, 35.5185, 36.2120, 37.5486, 39.7775),
        10: (13.3608, 14.8776, 16.1071, 17.2494, 18.3738, 19.5748, 20.9595, 21.7617, 22.6599, 23.8146, 25.3175, 26.3227, 27.7047, 28.4416, 29.3539, 29.9304, 30.5788, 31.4700, 32.6901, 33.5996, 34.7241, 35.3411, 36.1423, 37.2530, 38.2069, 39.5971, 40.9813),
        11: (14.5408, 16.1508, 17.4242, 18.6001, 19.7684, 21.0165, 22.4181, 23.2293, 24.1867, 25.3586, 26.9334, 27.9288, 29.3586, 30.1349, 31.0876, 31.6776, 32.3837, 33.2694, 34.4663, 35.3630, 36.4396, 37.0981, 37.9593, 39.0985, 40.1840, 41.0884, 43.0615),
        12: (15.7202, 17.4030, 18.7247, 19.9252, 21.1235, 22.4102, 23.8688, 24.7244, 25.6840, 26.8789, 28.4247, 29.5003, 30.9258, 31.7307, 32.7343, 33.3371, 34.0719, 35.0106, 36.3382, 37.2016, 38.3495, 38.9690, 39.8913, 40.9436, 41.7527, 42.9619, 44.9762),
        13: (16.8825, 18.6312, 19.9932, 21.2482, 22.4745, 23.7913, 25.2984, 26.1688, 27.1642, 28.3603, 29.9877, 31.0642, 32.6042, 33.4557, 34.4597, 35.0735, 35.8115, 36.8329, 37.9770, 38.8500, 39.9961, 40.7324, 41.5929, 42.8069, 43.8801, 44.9408, 46.9502),
        14: (18.0414, 19.8326, 21.2559, 22.5539, 23.8344, 25.1795, 26.7083, 27.5913, 28.6043, 29.8515, 31.4969, 32.6526, 34.1773, 34.9821, 36.0155, 36.6565, 37.3977, 38.3974, 39.6820, 40.4961, 41.8410, 42.4093, 43.3142, 44.6528, 45.3695, 46.6400, 48.6853),
        15: (19.1918, 21.0428, 22.5011, 23.8411, 25.1684, 26.5299, 28.1063, 29.0205, 30.0652, 31.3252, 33.0313, 34.1888, 35.7281, 36.5556, 37.5779, 38.2283, 39.0341, 39.9994, 41.3296, 42.2282, 43.5065, 44.2169, 45.1907, 46.3017, 47.1840, 48.5285, 50.2252),
    },
    0.15: {
        1: (1.4589, 1.9225, 2.3449, 2.7863, 3.2712, 3.8293, 4.5227, 4.9504, 5.4710, 6.1301, 7.0509, 7.7037, 8.5995, 9.0955, 9.7530, 10.1991, 10.6950, 11.3730, 12.1569, 12.7437, 13.7246, 14.1238, 14.7196, 15.7379, 16.3955, 17.1777, 18.7197),
        2: (2.8566, 3.5415, 4.1433, 4.7430, 5.3757, 6.0772, 6.9266, 7.4437, 8.0518, 8.7984, 9.8261, 10.5363, 11.5727, 12.0902, 12.8018, 13.2281, 13.7543, 14.4296, 15.3563, 16.0059, 16.9498, 17.4702, 17.9796, 19.0663, 19.5668, 20.4169, 21.7415),
        3: (4.1582, 5.0142, 5.7514, 6.4504, 7.1882, 7.9913, 8.9473, 9.5135, 10.1899, 11.0162, 12.1364, 12.9195, 13.9962, 14.5778, 15.3362, 15.7753, 16.3586, 17.0784, 18.0032, 18.7299, 19.7411, 20.2370, 20.8393, 21.7962, 22.5111, 23.6435, 25.2667),
        4: (5.4054, 6.3987, 7.2264, 8.0219, 8.8401, 9.7231, 10.7668, 11.3706, 12.0874, 12.9973, 14.2218, 15.0312, 16.1547, 16.7620, 17.4929, 17.9785, 18.5637, 19.2835, 20.2825, 21.0015, 22.0294, 22.5911, 23.3210, 24.2132, 24.9882, 25.7280, 27.2674),
        5: (6.6478, 7.7625, 8.6681, 9.5354, 10.4065, 11.3651, 12.4807, 13.1536, 13.9219, 14.8559, 16.1181, 16.9912, 18.1691, 18.8038, 19.5952, 20.1123, 20.6725, 21.4421, 22.4816, 23.2171, 24.3397, 24.8607, 25.6827, 26.5722, 27.1993, 28.0368, 29.9183),
        6: (7.8809, 9.0708, 10.0619, 10.9854, 11.9241, 12.9529, 14.1288, 14.8251, 15.6101, 16.5959, 17.9188, 18.8174, 20.0540, 20.7288, 21.5478, 22.0817, 22.6670, 23.4713, 24.5352, 25.3407, 26.3713, 26.9370, 27.6702, 28.7615, 29.3328, 30.2729, 31.9722),
        7: (9.0558, 10.3598, 11.4095, 12.3990, 13.3922, 14.4831, 15.7022, 16.4436, 17.2647, 18.2837, 19.6317, 20.5635, 21.8371, 22.5206, 23.3461, 23.8625, 24.5295, 25.3531, 26.5168, 27.3143, 28.3234, 28.8873, 29.5244, 30.4916, 31.2245, 32.3498, 33.9669),
        8: (10.2404, 11.6256, 12.7423, 13.7707, 14.8307, 15.9534, 17.2464, 17.9875, 18.8633, 19.9156, 21.3429, 22.2728, 23.5879, 24.2647, 25.1595, 25.7256, 26.3910, 27.2446, 28.4136, 29.1690, 30.2144, 30.8210, 31.6218, 32.6203, 33.4234, 34.4414, 36.5209),
        9: (11.3850, 12.8555, 14.0330, 15.1171, 16.2370, 17.3943, 18.7434, 19.5233, 20.4443, 21.5330, 22.9555, 23.9817, 25.3245, 26.0151, 26.9587, 27.4903, 28.1796, 28.9487, 30.1185, 30.9062, 32.0997, 32.7591, 33.5563, 34.6338, 35.5287, 36.4565, 38.9909),
        10: (12.5369, 14.0909, 15.3149, 16.4689, 17.6088, 18.8240, 20.2146, 21.0252, 21.9626, 23.0851, 24.6184, 25.6636, 27.0282, 27.7882, 28.7034, 29.2503, 29.9451, 30.7668, 31.9804, 32.8180, 33.9407, 34.6284, 35.4003, 36.4205, 37.4358, 38.4672, 40.4565),
        11: (13.6752, 15.3035, 16.6005, 17.7892, 18.9853, 20.2268, 21.6792, 22.4934, 23.4447, 24.6397, 26.1816, 27.2698, 28.6833, 29.4214, 30.3838, 30.9679, 31.6316, 32.5021, 33.7245, 34.5592, 35.7551, 36.4358, 37.2617, 38.2821, 39.2462, 40.4770, 42.5912),
        12: (14.8220, 16.5195, 17.8620, 19.1078, 20.3121, 21.6237, 23.0920, 23.9626, 24.9491, 26.1413, 27.7384, 28.8178, 30.2654, 30.9976, 31.9845, 32.6167, 33.3277, 34.2478, 35.5282, 36.4830, 37.7060, 38.2853, 39.0997, 40.2376, 41.1088, 42.2385, 44.4078),
        13: (15.9254, 17.7155, 19.1222, 20.3857, 21.6486, 22.9785, 24.5065, 25.3814, 26.4058, 27.6389, 29.2449, 30.3485, 31.8275, 32.6586, 33.7150, 34.3439, 35.0527, 36.0102, 37.3151, 38.1773, 39.3314, 39.9860, 40.9075, 42.0636, 43.0308, 44.3769, 46.1788),
        14: (17.0621, 18.9209, 20.3429, 21.6808, 22.9702, 24.3492, 25.8903, 26.7922, 27.8335, 29.0903, 30.7490, 31.8629, 33.4229, 34.2234, 35.2785, 35.9069, 36.6575, 37.6289, 39.0296, 39.8267, 41.0551, 41.7954, 42.6250, 43.9528, 44.9296, 46.1650, 48.0369),
        15: (18.1985, 20.0907, 21.5622, 22.9197, 24.2690, 25.6835, 27.2570, 28.1979, 29.2792, 30.5470, 32.2542, 33.4026, 34.9738, 35.8007, 36.8119, 37.4362, 38.2190, 39.2577, 40.5508, 41.5440, 42.7329, 43.4555, 44.3789, 45.6740, 46.5388, 47.8834, 49.3570),
    },
    0.2: {
        1: (1.2586, 1.6778, 2.0731, 2.4910, 2.9569, 3.4949, 4.1714, 4.5891, 5.0951, 5.7528, 6.6435, 7.3100, 8.1841, 8.7108, 9.3492, 9.7841, 10.3050, 10.9426, 11.7934, 12.3268, 13.2601, 13.7494, 14.3038, 15.3106, 15.8631, 16.8461, 18.2646),
        2: (2.5391, 3.1969, 3.7743, 4.3504, 4.9675, 5.6705, 6.5078, 7.0147, 7.6256, 8.3783, 9.4034, 10.1160, 11.1134, 11.6574, 12.3445, 12.7721, 13.2731, 13.9123, 14.8470, 15.4527, 16.4199, 16.9588, 17.6224, 18.6191, 19.2053, 20.0562, 21.2911),
        3: (3.7583, 4.5906, 5.3083, 6.0067, 6.7251, 7.5326, 8.4925, 9.0583, 9.7361, 10.5756, 11.6714, 12.4442, 13.5350, 14.1122, 14.8548, 15.2925, 15.8381, 16.5769, 17.5488, 18.2232, 19.1782, 19.7598, 20.3812, 21.3880, 22.0428, 22.9323, 24.6790),
        4: (4.9445, 5.9234, 6.7315, 7.5178, 8.3267, 9.2253, 10.2619, 10.8740, 11.5894, 12.4867, 13.7070, 14.5341, 15.6476, 16.2473, 17.0063, 17.4672, 18.0600, 18.8044, 19.8031, 20.4931, 21.5235, 22.0580, 22.7496, 23.7045, 24.2760, 25.3906, 26.7400),
        5: (6.1343, 7.2180, 8.1178, 8.9893, 9.8645, 10.8176, 11.9330, 12.6039, 13.3924, 14.3428, 15.5771, 16.4608, 17.6215, 18.2879, 19.0736, 19.5717, 20.1729, 20.8927, 22.0194, 22.7851, 23.8319, 24.3855, 25.0649, 26.1042, 26.7485, 27.6120, 29.5750),
        6: (7.2871, 8.4812, 9.4767, 10.4025, 11.3408, 12.3690, 13.5522, 14.2568, 15.0626, 16.0309, 17.3486, 18.2528, 19.4707, 20.1600, 21.0412, 21.5590, 22.1857, 22.9567, 24.0353, 24.7284, 25.8593, 26.3617, 27.0626, 28.1092, 28.9506, 29.9605, 31.7294),
        7: (8.4255, 9.7394, 10.8000, 11.7769, 12.7858, 13.8628, 15.0989, 15.8037, 16.6632, 17.6814, 19.0566, 19.9774, 21.3110, 21.9974, 22.8476, 23.3760, 23.9681, 24.7355, 26.0112, 26.7408, 27.7700, 28.3756, 29.0613, 29.9974, 30.8985, 31.9200, 33.5807),
        8: (9.5777, 10.9608, 12.0741, 13.1253, 14.1731, 15.3012, 16.5952, 17.3531, 18.2299, 19.2854, 20.7182, 21.6982, 22.9779, 23.7094, 24.5661, 25.1186, 25.8052, 26.6280, 27.7760, 28.6064, 29.7470, 30.2825, 31.0803, 32.1632, 33.0384, 34.1250, 36.1007),
        9: (10.6939, 12.1603, 13.3399, 14.4427, 15.5512, 16.7256, 18.0642, 18.8672, 19.7782, 20.8889, 22.3376, 23.3248, 24.7038, 25.4308, 26.3364, 26.8923, 27.5437, 28.3792, 29.4910, 30.3297, 31.5066, 32.1083, 33.0275, 34.1751, 34.9593, 36.0761, 38.1260),
        10: (11.7927, 13.3507, 14.6048, 15.7502, 16.8900, 18.1196, 19.5099, 20.3293, 21.2639, 22.4149, 23.9494, 24.9976, 26.4159, 27.1436, 28.0520, 28.6434, 29.3147, 30.2431, 31.3626, 32.2060, 33.4162, 34.0329, 34.7770, 36.0200, 36.8039, 38.0109, 40.2466),
        11: (12.9045, 14.5460, 15.8462, 17.0603, 18.2493, 19.5042, 20.9490, 21.7948, 22.7396, 23.9360, 25.5377, 26.5687, 28.0114, 28.7874, 29.7289, 30.3381, 31.0348, 31.9403, 33.1535, 33.9276, 35.2155, 35.8688, 36.6981, 37.8709, 38.5664, 40.2349, 42.3547),
        12: (14.0101, 15.7180, 17.0835, 18.3317, 19.5610, 20.8680, 22.3592, 23.2239, 24.2363, 25.4415, 27.0547, 28.1308, 29.5831, 30.3638, 31.2816, 31.9337, 32.6648, 33.5868, 34.8174, 35.7698, 37.0992, 37.8070, 38.4741, 39.7284, 40.5227, 41.7987, 44.1373),
        13: (15.1037, 16.8896, 18.3106, 19.5910, 20.8658, 22.2152, 23.7439, 24.6555, 25.6756, 26.9324, 28.5352, 29.6590, 31.0940, 31.9061, 32.9690, 33.6087, 34.3822, 35.3404, 36.7239, 37.5854, 38.8065, 39.3811, 40.3257, 41.6058, 42.6363, 44.0091, 45.9137),
        14: (16.1937, 18.0533, 19.5129, 20.8261, 22.1708, 23.5600, 25.1459, 26.0381, 27.1076, 28.3786, 30.0365, 31.1531, 32.6831, 33.5000, 34.5544, 35.2127, 35.9762, 36.9678, 38.3974, 39.2464, 40.4897, 41.2039, 42.1264, 43.4800, 44.4784, 45.5482, 47.7681),
        15: (17.3014, 19.2185, 20.7066, 22.0742, 23.4325, 24.8806, 26.4653, 27.4156, 28.5128, 29.8237, 31.5310, 32.6867, 34.2636, 35.0562, 36.1266, 36.7522, 37.5085, 38.4851, 39.8839, 40.7716, 42.1724, 42.7837, 43.8383, 45.2401, 46.0307, 47.3030, 49.2700),
    },
    0.25: {
        1: (1.0729, 1.4504, 1.8238, 2.2171, 2.6586, 3.1803, 3.8322, 4.2472, 4.7491, 5.3933, 6.2819, 6.9043, 7.8138, 8.2867, 8.9407, 9.3327, 9.8523, 10.5013, 11.4341, 11.9581, 12.7978, 13.2956, 13.9103, 14.6929, 15.4326, 16.3355, 17.7368),
        2: (2.2349, 2.8627, 3.4252, 3.9853, 4.5878, 5.2772, 6.1073, 6.6002, 7.2038, 7.9697, 8.9786, 9.6802, 10.6668, 11.2106, 11.8827, 12.3144, 12.8277, 13.4797, 14.3830, 15.0467, 15.8963, 16.4532, 17.1116, 18.0601, 18.7232, 19.7024, 21.1046),
        3: (3.3772, 4.1865, 4.8795, 5.5604, 6.2826, 7.0818, 8.0342, 8.6055, 9.2706, 10.1017, 11.2263, 11.9873, 13.0212, 13.6239, 14.3811, 14.8414, 15.3684, 16.0668, 17.0595, 17.7202, 18.7135, 19.1121, 19.9011, 20.7993, 21.6406, 22.4448, 24.1077),
        4: (4.5090, 5.4498, 6.2557, 7.0264, 7.8342, 8.7284, 9.7547, 10.3712, 11.0861, 11.9620, 13.1881, 14.0211, 15.1512, 15.7634, 16.4745, 16.9518, 17.5133, 18.2741, 19.2376, 19.9121, 20.9418, 21.5210, 22.2402, 23.1991, 23.8140, 24.9883, 26.3652),
        5: (5.6350, 6.6934, 7.5851, 8.4481, 9.3294, 10.2753, 11.3919, 12.0361, 12.8240, 13.7787, 15.0403, 15.9141, 17.0935, 17.7203, 18.5443, 19.0240, 19.6424, 20.3874, 21.4832, 22.2757, 23.3067, 23.8586, 24.5577, 25.6390, 26.1631, 27.0711, 29.0745),
        6: (6.7305, 7.9115, 8.8960, 9.8262, 10.7505, 11.7701, 12.9638, 13.6665, 14.4799, 15.4676, 16.7853, 17.7009, 18.9158, 19.5791, 20.4651, 21.0003, 21.6395, 22.4122, 23.5545, 24.2435, 25.3068, 25.9115, 26.5763, 27.4995, 28.2474, 29.4226, 31.4854),
        7: (7.8289, 9.1229, 10.1732, 11.1596, 12.1593, 13.2374, 14.4842, 15.2189, 16.0574, 17.0912, 18.4775, 19.4039, 20.6745, 21.4060, 22.2783, 22.7901, 23.4691, 24.2504, 25.3626, 26.2113, 27.2627, 27.7700, 28.6046, 29.5448, 30.1821, 31.5037, 33.1505),
        8: (8.9119, 10.3128, 11.4230, 12.4619, 13.5188, 14.6572, 15.9617, 16.7183, 17.5976, 18.6635, 20.1052, 21.0757, 22.3840, 23.0845, 23.9945, 24.5347, 25.1773, 26.0826, 27.2335, 28.0733, 29.1561, 29.7991, 30.4479, 31.6861, 32.5075, 33.7839, 35.7735),
        9: (9.9920, 11.4667, 12.6368, 13.7450, 14.8554, 16.0584, 17.3885, 18.1821, 19.1203, 20.2321, 21.7216, 22.7003, 24.0856, 24.8148, 25.7155, 26.3059, 26.9646, 27.8022, 28.9647, 29.7813, 30.9063, 31.6298, 32.5106, 33.7182, 34.4066, 35.7226, 37.7656),
        10: (11.0715, 12.6199, 13.8710, 15.0231, 16.1804, 17.4145, 18.8050, 19.6414, 20.6038, 21.7744, 23.3024, 24.3597, 25.7929, 26.5315, 27.4535, 28.0233, 28.7527, 29.6208, 30.8114, 31.6564, 32.8884, 33.5763, 34.4052, 35.3945, 36.2355, 37.3684, 39.6817),
        11: (12.1466, 13.7815, 15.0917, 16.3010, 17.5046, 18.7722, 20.2367, 21.0833, 22.0597, 23.2420, 24.8485, 25.9048, 27.3576, 28.1359, 29.1165, 29.7080, 30.4274, 31.3690, 32.5727, 33.4753, 34.6751, 35.3609, 36.2560, 37.4166, 38.0855, 39.5477, 41.6147),
        12: (13.2035, 14.9267, 16.3078, 17.5454, 18.7986, 20.1192, 21.6309, 22.5064, 23.5309, 24.7615, 26.3570, 27.4533, 28.9045, 29.6942, 30.6471, 31.2801, 32.0443, 32.9909, 34.2884, 35.1989, 36.6220, 37.2466, 38.0378, 39.0963, 40.0965, 41.2814, 43.6252),
        13: (14.2695, 16.0637, 17.4975, 18.7943, 20.0802, 21.4543, 22.9834, 23.8969, 24.9442, 26.2106, 27.8724, 28.9180, 30.4517, 31.2239, 32.2814, 32.9642, 33.7162, 34.6765, 36.0497, 37.0733, 38.2269, 38.8500, 39.6326, 41.0037, 41.9862, 43.4800, 45.3864),
        14: (15.3336, 17.2012, 18.6856, 20.0200, 21.3460, 22.7576, 24.3593, 25.2851, 26.3509, 27.6439, 29.2984, 30.4502, 31.9798, 32.8297, 33.8709, 34.5049, 35.3410, 36.2881, 37.6740, 38.7241, 39.8546, 40.5741, 41.4892, 42.7892, 43.9230, 45.2154, 47.3651),
        15: (16.4069, 18.3239, 19.8459, 21.2160, 22.6010, 24.0590, 25.6800, 26.6234, 27.7447, 29.0826, 30.8095, 31.9462, 33.5142, 34.3785, 35.4085, 36.0900, 36.8362, 37.8113, 39.2654, 40.1780, 41.5488, 42.2285, 43.1058, 44.5891, 45.5018, 46.7175, 49.0266),
    },
}
