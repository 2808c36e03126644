// Generated by data/generate.py -- do not edit by hand.
#include <string>
#include <vector>

#include "qibonn/data.hpp"
#include "qibonn/errors.hpp"

namespace qibonn {

namespace {

const char kDiabetesCsv[] = R"qcsv(glucose,bmi,age,pedigree,insulin,pregnancies,pressure,skinfold,outcome
121,34.2,30,0.176,27.7,0,70.1,41.9,0
106.2,27.3,38,0.588,92.1,1,68.4,31.6,1
80.7,28.6,12,0.044,-131.8,3,44.9,24.8,1
125.7,30.6,5,0.292,74.4,4,39.9,12.9,1
91.6,25.9,45,0.204,76.3,7,57.9,18.7,0
124.3,32.5,20,0.495,236.3,0,85.3,22.4,1
101.8,47,41,0.074,88.6,6,65.4,31.4,0
119,37,49,0.247,103.4,2,71.4,1.5,0
103.6,30.5,43,0.848,-72.2,1,81.3,-11.4,1
107.1,31.3,47,0.698,42.4,3,64.2,44.9,0
108.2,29.7,37,0.43,57.3,0,68.8,13.4,1
156,36.9,33,0.691,40.9,7,68.9,29.8,1
82.3,34.6,14,-0.202,45,1,72.1,56.4,1
96,27.3,35,0.633,59.7,3,82.3,28.8,0
90,31.4,33,0.122,109.9,1,87.5,23.6,0
123.7,27.6,32,-0.189,-50.1,5,28.6,34,0
68.6,37.7,24,0.727,95.1,0,92.7,43.6,0
119,29.9,31,0.148,206.3,2,68,7.8,0
102.2,22.4,47,0.419,191.1,4,55.8,15.3,0
104.2,32.1,29,0.371,-78.5,1,100.4,9.8,0
89.4,34.5,48,-0.01,56,2,35.5,32.3,0
120.3,32.5,25,0.62,18,3,47.9,1,0
161.1,28.2,36,0.459,29.3,2,81,15.7,1
116.5,32.2,46,0.695,124,2,42.7,35.7,1
150,30.9,39,0.728,175.6,7,60.3,44.7,0
83.6,38.5,38,0.758,296.1,9,47.2,-6.5,1
145.5,24.4,33,0.747,-109,0,73.9,21.2,0
113.6,32.3,24,-0.029,60.8,0,37.8,28.6,1
119.2,35,22,0.253,-34.9,1,72.7,8,0
131.7,34.5,55,0.01,182.1,3,68.7,-2.7,0
107.2,37.6,32,0.497,46.6,8,68.6,-14.7,0
100.2,17.2,-3,0.295,233.4,4,46.7,5.4,1
154.9,33.2,34,0.452,84.4,7,79.5,24,0
89.7,35.8,25,0.831,-66.2,3,68.9,-0.7,0
172.7,43,28,0.725,123.5,0,73.8,19.5,0
123.5,23.9,30,0.411,216.6,5,68.9,45,1
104.3,29.1,13,0.988,190.9,7,81.7,22.3,0
127.5,30.1,31,0.488,253.9,6,67.9,11.2,0
102,44,39,0.492,40.2,0,67.7,34.5,1
109.2,30.3,31,0.506,-103.2,3,52.8,34.7,0
97.9,36.3,50,0.367,10.8,4,69,4.6,0
134.8,47.1,30,0.403,-40.2,5,45.3,2.8,1
159.4,25.2,45,0.973,109.8,6,106.1,17.4,1
103.2,21.9,33,0.958,190.4,1,52.7,12.4,0
129.8,30.5,35,0.568,45.6,4,72.9,19.2,0
136.1,46,40,0.488,-113.9,5,32,-2,0
146.6,37.3,31,-0.094,37.3,1,81.1,56.6,1
127.5,26.2,20,0.451,59.7,0,71.2,2.1,1
154.4,40,45,0.314,139.2,3,61.6,15.1,0
82,21.2,42,0.407,104.9,7,36.1,8,0
126.3,34.9,29,0.81,104.2,0,51.3,33.4,0
134.9,17.8,48,0.667,234.5,2,63.4,2.5,1
197.1,30.7,50,0.256,98.8,0,61.7,36.2,0
83.4,40,37,0.125,22.3,2,68.1,11.9,0
96.2,29.7,22,0.044,74.5,7,39.9,20.6,1
101.5,24.7,42,0.299,252.3,1,76.3,16.9,0
98.4,36.4,31,0.669,74.6,0,67.1,21.3,0
149.8,25.2,33,-0.098,154.9,0,34.7,19.6,0
154.2,20.6,21,0.225,-49.9,5,53.7,9,0
138.5,26.3,38,0.149,-59.4,0,104.4,15.4,0
128.3,31.8,35,0.486,299.4,0,39.4,4.3,0
81,37.6,42,0.153,-79.9,3,95.4,-24.6,0
136.8,23.9,44,0.114,47.2,0,50.4,42.7,0
145.6,29,23,-0.155,34.7,4,67.4,19,1
87.3,31.5,33,0.896,294.7,3,54.4,19.5,0
102.8,26.4,32,0.126,149.7,3,73.8,17.6,0
99.2,24.9,30,0.289,106.9,4,43.1,21.6,0
80.7,27.4,30,-0.215,90.5,4,66,13.7,0
109.8,24.7,30,0.288,90.5,0,73.5,22.8,0
116.8,28.7,39,-0.079,133,5,74.4,26.6,0
101.4,30.1,40,0.612,103.8,0,79.2,39.2,0
151.3,33.8,16,0.781,63.1,0,76.2,-3.4,0
82.1,27.2,47,0.348,111.2,10,99.3,18.8,0
113.8,22.5,25,0.61,125.5,4,87.9,8.1,0
119.3,37.5,39,0.823,125.7,3,75.9,4.5,1
71.8,36.4,32,0.572,-115.2,3,57.6,6.7,0
53.3,29.5,43,0.596,10.9,4,83.4,-23.7,0
117.3,36.1,41,1.031,210.5,5,74.7,33.1,1
104.8,31.7,43,1.116,61.7,4,72.8,42,0
120.1,43,22,0.409,57.2,6,88.9,-3.7,1
93.5,34.5,26,-0.032,199.4,5,78.4,12.9,0
151.9,30.2,45,0.169,-18.2,4,55.7,31.3,0
128.8,25.1,34,0.354,185.3,2,60.7,39.9,0
188.2,47,34,0.542,256.3,3,50.4,22.4,0
134.5,25.8,15,-0.004,156.5,1,66.3,23.9,1
139.6,29.5,38,0.176,38.4,0,90.5,20.1,0
98.8,29.4,31,0.701,-103.5,0,61.8,61,0
149.7,31.2,41,1.149,53.1,3,92,28.4,1
141.1,28.2,54,1.034,145.1,6,30.5,30.7,1
115.2,35.3,41,0.357,-114.4,5,54.9,15.2,0
102.9,29.4,8,0.872,109.1,8,106.6,20.9,0
66.9,25.3,20,0.304,89.2,0,75.5,-3.7,0
129.9,31.2,30,0.446,17.9,2,37,20,0
176.4,46.9,48,0.703,2.2,9,67.9,19.4,1
112.3,32.7,28,0.442,-44.7,3,112.3,19.4,0
113.8,36,41,0.102,56.2,7,74.1,22.5,0
167.6,26.9,34,0.298,251.4,0,56.3,12,1
140.9,36.5,48,-0.049,166.3,3,56.4,29.1,0
93.4,16.4,29,-0.024,5.4,5,74.9,45.9,0
115,20.5,25,0.167,-60,5,56.7,-11.1,0
141.9,31.2,37,0.505,152.6,4,92.5,27.3,1
132.8,35.1,17,0.416,50.2,5,43.2,46.6,0
124.1,22.9,14,0.377,69.7,1,70.8,10.2,0
137.5,26.6,33,0.793,375.7,0,60.2,7.1,0
144.5,23.4,28,0.46,-32.5,1,60,-13.1,0
77.6,28.9,35,0.409,-124,2,84.2,29.4,0
118.6,25.3,40,0.279,-54.5,1,96.5,24,1
155.8,28.4,43,0.272,61.9,12,83.6,12.5,0
118.5,34.4,46,0.309,-120.3,3,69.3,22.3,0
160.5,34.4,42,0.107,179.8,11,83.7,24.6,0
125.6,45.4,23,0.433,132.9,6,60.7,25.4,1
112.7,32.9,32,0.093,77.6,7,50.6,16.6,1
140.9,24,35,0.12,210.5,12,107.4,17,0
143.2,32.9,34,0.981,-71.7,7,68.1,43,1
126.6,27,36,0.713,84.1,5,59.1,-13.6,0
148,37.2,35,0.493,199.2,2,55.6,17.5,0
156.7,21.6,46,0.259,-46.6,8,67.2,-0.3,0
110.2,39,46,0.329,126.7,6,56.8,26.2,0
120,28,28,0.492,83.4,2,60.9,38.3,0
127.4,38.6,46,0.664,341.2,1,84.4,15.4,1
176.7,44.8,12,0.15,156.4,6,83,19.4,1
134.7,36.9,32,0.809,-179.8,6,49.4,35.8,1
114.1,25.3,37,0.169,-25,0,68.5,28.4,0
151.7,30.9,45,0.476,69.3,6,89.1,15,1
113.7,30.8,34,0.173,198.2,2,77.8,7.3,1
131.8,34.9,28,1.137,122.7,10,87.2,9.9,0
109.5,35.3,34,0.486,47.1,0,64.7,-15,0
132.2,26.6,25,0.398,111.4,0,35.8,3.4,0
59.7,24.7,50,0.121,154.9,0,74.7,15.4,0
119.2,36.3,52,0.534,94.3,0,80.1,16.6,1
146,31.7,52,-0.184,45.9,7,62.3,7.8,0
113,21.7,34,1.275,211.7,0,52.4,14,0
151.1,25.8,25,0.762,179.4,3,47.8,-4.3,0
100,15.3,41,0.262,135.3,10,91.3,2.1,0
147.1,40.7,25,0.155,67.4,0,96.9,-18,1
87.8,30,31,0.525,111.2,3,90.6,-13.7,1
121,26.6,34,0.543,-24.9,2,84.1,26.1,1
100.6,47.3,58,-0.013,114.7,12,83.9,24,0
114.8,27.9,31,0.288,165.7,2,60.6,1.3,0
119.5,25.3,31,0.814,122.1,6,75.8,21.4,0
117.2,29.7,41,0.112,234.2,4,54.8,12.7,0
100.7,33.2,25,0.847,-9.9,0,55.1,-11.6,1
119.8,39.9,40,0.029,-7.7,10,75.1,20.6,0
152.7,50.4,47,0.516,120.8,6,57.4,3.6,1
122.6,24.9,32,0.502,349.2,1,66.7,17.9,0
134.1,39.9,28,0.199,-108.7,1,79.2,21.2,1
90.5,29.2,33,0.636,11.8,3,34.4,2.1,0
169.5,15.6,29,0.542,36.9,1,67.8,20.4,0
118.5,17.9,31,0.188,17,5,81.2,34.8,0
106.1,38.9,46,0.845,239.8,3,65.7,33.7,1
80,33.6,27,0.348,-120.3,1,68.6,34.7,0
150.7,31.4,31,0.196,126.3,3,80.5,48.5,0
120,20.8,24,-0.011,-57.7,8,73.3,-3.8,1
140.6,41.5,29,0.247,41.2,5,81.2,39.4,1
157.4,40.9,48,0.688,-96.1,3,75,14.4,1
148.3,29.3,23,0.947,156.6,5,86.6,37.5,0
131.2,13.6,26,0.319,-33.2,4,91.7,12.7,0
87,47.2,28,0.063,107.3,5,55.6,33.1,1
106.4,25.1,35,0.724,7.1,5,67.2,65.7,0
99.7,42.4,32,0.428,163,7,93.1,25.8,1
103,28,39,0.662,240.8,5,89.1,44.8,1
125.9,20.9,20,-0.004,263,1,92.4,29.9,1
172.5,39.5,32,0.404,89.8,4,58.9,20,1
169.3,19.2,36,0.171,101.5,7,67.9,32.9,1
73.3,40.3,26,0.675,101,0,54.6,24,1
167.6,34.2,36,0.004,244.6,10,69.5,17,0
72.4,38.6,63,0.707,225.3,6,50.3,41.9,0
84,30.4,36,0.761,127.8,5,54.5,-0.1,0
122.8,26.7,19,0.052,23.6,0,43.4,-5.7,1
126.5,35.1,55,-0.024,1.8,7,64.9,15.3,0
172.3,29.5,20,0.035,118.6,5,42.9,4.7,1
137,36.3,26,0.675,145.8,0,63.1,27.1,0
103.8,16,30,0.718,261.7,0,118.7,2.5,0
149.7,41.3,44,0.519,-53.6,6,55.4,-19.9,0
205.9,37.3,53,0.169,248.8,9,98.5,20.2,0
84.9,30.7,9,-0.092,90.6,0,65.9,18.8,1
178.9,41.7,33,0.869,-9.7,3,86.3,0.6,1
112.6,22.1,34,1.009,-6.5,5,52,2.1,1
83.9,42.9,59,0.629,-2.4,6,62.6,33.3,1
129.7,34.1,40,0.279,33.5,0,60.6,-2.3,0
116.7,24.8,34,0.62,-83.3,1,51.1,32.4,0
172.2,38.4,29,0.953,-94.1,9,56.5,-24,1
200.5,43.8,22,0.526,55.3,4,40.8,9.6,1
135,33.7,46,0.496,350.2,1,73.9,-10.2,1
83.4,42,23,0.645,72.9,0,62.4,12.3,0
106.4,37.7,40,0.279,-24.3,5,67.1,37,0
200.7,38.3,33,0.413,-18.5,1,49.9,14.2,1
108.2,37.6,29,0.405,-60.1,9,78.6,49.1,0
144.9,43.2,30,0.707,391.1,0,91.3,47.7,1
133.6,37.7,47,0.249,128,1,55.9,10.4,0
116.6,33.1,38,-0.009,313.1,8,83.1,14.6,1
118.3,36.2,38,-0.098,167.3,14,33,36.8,0
132.4,31.1,48,0.07,99.2,9,65.2,13.6,0
124.5,28.6,50,0.162,183.1,0,82.1,18.8,1
41.3,32,21,0.319,261.9,0,48.3,44.2,0
124.6,43.9,37,0.171,72.2,8,87.4,20.5,1
122.5,31.1,26,1.125,80.9,0,59.7,32.4,0
140.8,30.9,25,0.478,-117.9,0,84.6,12.6,0
132.6,41.4,40,0.477,331.6,6,62.1,32.5,1
133.6,25.4,34,0.414,-152.5,3,63.5,13.3,0
70.3,29.3,33,0.505,-54.2,6,45.3,16.8,0
161.2,26.7,27,0.834,34.6,3,73.3,37.8,0
53.1,25.6,22,0.102,-20.9,1,74.9,5.9,1
124.8,35.1,25,0.514,272.9,5,56.6,19.4,0
92.9,34.1,43,0.193,55.4,8,59.3,23.6,0
89.6,25.7,27,1.188,33,2,58.3,17.9,0
140.7,33.4,56,0.541,246.5,5,80.5,-2.6,0
117.2,31.5,30,-0.24,181.3,2,60.7,16.4,1
114.2,35.1,19,0.163,113.4,4,61.8,11.3,1
96,31.6,46,0.121,255.2,7,60.4,33,0
77,19,19,0.335,42.6,2,70.9,-13.7,0
135.9,21.4,26,0.334,-53,0,49.9,20.3,0
138.7,36.2,22,0.209,-25.9,5,30.3,40.3,1
106.5,26.1,37,0.811,119.4,7,71.6,40.2,0
158.4,31.3,49,0.524,90,1,63.5,32.9,1
81.6,36.9,37,0.562,-173.7,3,81.3,8.3,0
123.7,14.2,40,0.251,180.2,0,82.2,16.7,0
145.2,25.1,26,1.21,-15.4,1,63.7,4.1,0
156.7,44.9,25,-0.1,214.8,8,84.6,39,1
95,30.7,18,0.002,192.8,2,112.3,21.7,0
101.8,38,53,0.63,-60,5,95.1,12.6,1
97.8,39.6,35,0.106,36.3,1,74.6,22.3,0
155.5,37.3,16,0.604,183.1,5,88.6,11.7,1
92.5,39,21,-0.243,197.9,1,63.2,-1.9,1
81.2,23.3,29,0.592,-184.2,6,46.5,3.4,0
141.3,31.4,16,1.079,-19,5,72.8,43.1,0
107.3,39.6,25,0.84,-7.7,3,105,25.6,0
124.3,48.8,37,0.201,164.5,0,90.4,39.8,1
103.8,27.3,35,0.475,-32.4,6,30.2,13.6,0
108.9,30,36,0.065,147.7,3,56.6,-1.4,0
85.5,34.7,22,0.491,202.1,7,98.6,15.8,0
88.4,39.7,36,0.841,81.3,8,85.1,32,1
136.1,35,36,0.545,193.9,2,102,18.8,0
150.6,31.3,30,1.141,44.4,0,55.4,15.4,0
185.7,33.6,43,0.139,120.5,6,103.2,9.4,0
139.1,34.3,22,0.464,49.7,0,80.4,29.1,0
107.8,22,49,0.558,196.9,9,59.1,33.5,0
113.8,31.5,32,0.47,208.1,4,66.1,16.1,1
131.2,25.3,27,0.453,14.9,3,57.4,52.6,0
160.9,35.4,32,1.193,117.1,4,74.8,25.4,1
163.3,31.9,56,0.179,159.8,0,103.5,15.2,0
119.3,38.9,47,0.103,40.2,0,71.6,18.9,0
110.5,26.9,29,0.224,140.8,9,32.3,18.6,0
108.5,35.7,23,0.422,-39.6,6,70.9,17.9,0
132.1,30.2,16,0.667,113.2,3,87.7,40,1
88.2,26.1,50,0.938,-4.9,0,56.9,12.5,1
73.5,32.2,19,0.071,185.4,1,67.6,30.6,1
145.4,29.5,33,0.198,280.9,6,48,20.6,0
142.4,35.6,53,0.923,18,3,44.7,24.5,1
125.5,52.3,34,-0.221,2.7,4,45.1,6.6,1
110,34.6,31,0.177,170.6,2,59.5,-1.6,1
97.4,36.9,15,0.447,162.5,3,73.6,2.6,0
160.3,40.3,36,-0.109,-40.3,7,101.5,25.2,1
158.4,27.4,31,0.47,128.7,0,86.9,41.7,0
86.5,21.8,37,0.254,-192.6,7,72,12.9,0
184.4,33,25,0.503,-39.6,1,76.3,11.6,1
107.5,44.5,42,0.735,140.8,5,96.7,20.2,1
176.7,24.9,30,0.015,40.5,6,96.6,9.9,1
121.2,29.3,25,0.078,87,0,71.1,20.8,0
101.3,24.4,18,1.088,-74.3,9,80.4,14.7,0
86.3,39.8,52,0.162,45.6,7,75.4,52.5,0
103.9,36.1,19,1.162,-4,0,66.6,18.3,0
178.5,29.5,33,0.666,262.4,4,88.8,28.8,1
112.1,32.6,33,0.168,219.6,0,91.3,35.8,0
118.2,26.3,31,0.626,165.5,5,87.9,11.6,0
128,20.2,41,0.521,32.2,8,82.1,-24.6,0
122.2,21.1,45,1.291,20.4,4,64.2,26.1,1
140.3,41.7,22,0.989,-27.1,5,91,31.9,0
92.8,26.7,28,0.453,211.9,0,77.9,30.3,0
137.7,35.5,50,0.631,178.6,6,103.1,-9.9,1
159.5,30,30,0.15,-134.9,3,55.9,28.4,1
76.8,42.7,36,0.388,-1.6,1,47.5,11.8,0
121.2,30.7,17,0.382,-22.7,4,104.4,30.5,0
111.6,19.8,17,-0.087,163.5,1,70.2,10.5,1
123.7,42.5,25,0.357,-12.7,7,49.5,2.4,0
79.4,21.4,38,1.318,-34.5,7,73.8,2.9,1
112.7,30.3,25,1.107,-139.2,5,75.3,11.2,0
125.5,38.6,35,0.608,159.7,0,97.1,57,1
150.4,39.6,18,0.431,-13.4,2,87.4,7.6,1
117.1,17.7,31,0.5,-1.1,1,104.8,1.1,0
89.5,25.9,46,1.164,118.2,1,60.9,37.5,1
93.7,42.9,49,0.493,154.3,6,98.5,3.7,1
156.4,29.2,25,0.504,55.4,0,38.7,5.4,0
164.6,46.7,40,0.861,20.6,4,74.4,3.2,1
91.3,32.7,29,0.119,124.5,3,88.4,20.4,1
112,33,31,0.25,33.8,6,81.3,41.1,0
70.2,29.1,28,0.527,28,2,83.9,23.3,0
86,42,44,0.281,175.6,1,90.4,17,1
96.9,29.2,25,0.533,100.1,4,58.4,-38.1,0
123.8,17.8,36,0.843,111.5,2,65.6,18.4,0
104.5,27.6,23,0.862,78.2,7,64.2,21.7,0
115.9,35.5,42,0.549,2.5,1,100.5,16,1
112.3,43,45,0.646,34.1,12,76.5,29.3,1
115.9,21.4,18,0.604,125.1,3,46.7,-2.6,0
111.2,21.1,43,0.85,405.3,7,57.7,6.6,0
17.4,27.5,31,0.789,150.3,6,73.1,31.1,0
164.4,24,28,0.012,266.1,8,83.3,1.3,0
126.2,30.2,34,0.408,139.8,2,85.2,24.4,0
112.2,31.2,28,0.739,48.8,5,61.5,-3.3,0
148.2,24.1,40,0.609,-110.4,1,59.2,7.4,0
85.5,37.6,30,0.597,30.5,5,54.7,20.1,0
138.5,32.3,28,0.111,99.3,5,64.1,8.2,1
137.3,50.6,30,0.581,123.4,0,71.4,9.2,1
162.5,30.1,24,0.398,99.2,2,68,-1.2,1
114.2,37.8,55,0.703,111.3,8,88.4,47.1,1
153.5,31.1,36,0.529,114.7,4,54.1,-13.2,1
100.8,16.8,34,0.471,-112.7,6,85.5,22,0
171,46,20,0.812,130.7,5,86.8,9,0
103.2,25.8,25,0.437,-87,0,80,19.4,0
132.5,17.8,24,0.287,83.7,2,86.7,19.6,0
121.5,32.1,41,0.314,209.1,5,71.9,21.2,0
136.6,39.6,43,0.594,180.8,4,92.8,20.1,0
58.7,42,34,0.084,57.2,1,108.9,28.5,0
73.9,36.1,29,1.103,-41.1,0,70.3,14.9,0
108.5,15.9,38,1.022,-139.5,8,58.2,58.1,0
134.1,30.6,45,0.644,11.9,6,59.3,-8.1,1
181.9,29.4,26,0.582,-99.4,0,59.5,12.2,0
123.2,40.4,28,0.633,149.2,0,73.3,5.4,0
152.9,35.4,33,0.028,93.3,1,82.4,18.6,0
96.6,38.9,41,0.274,213.6,3,63.1,22.5,0
98.4,28.7,31,0.975,252.5,3,99.6,19.8,0
132.4,38.6,36,1.267,108,0,93.8,13.9,1
111.9,9.6,44,0.74,171.9,7,101.1,19.8,0
149.1,26.4,29,0.819,125,0,75.9,17.6,0
96.4,35.3,29,-0.048,-47.8,10,40.2,24.1,1
139.3,36.8,20,0.364,96.2,7,56.7,1.9,1
151.1,40.3,37,0.269,126.8,4,84.9,0.5,0
124.5,30.8,21,0.541,84,2,76.5,-2.2,0
119.4,35.2,36,0.825,-58.1,0,73.5,27.8,0
184.6,36.6,23,0.736,-17.2,0,118.6,25.7,0
142.4,36.2,53,0.564,220,0,42.5,43.3,1
165.2,35.8,35,0.525,0.9,9,81.5,28.6,1
132.3,39.9,39,0.716,-54.4,6,110.6,12.2,1
117.1,38.7,44,0.676,-106,6,46.5,7.3,0
137.4,29.8,42,1.509,169.4,6,52,10.2,1
89.1,28,21,0.252,56,0,42,-1.3,0
134.6,32.4,44,0.815,40.8,6,41.6,57,1
156.9,30.4,20,0.595,-135.1,1,83.2,21.7,1
106.3,39.1,22,0.564,22.7,1,77.8,4.6,0
178.1,27.6,55,0.109,149.7,0,43.5,23.1,0
141.3,22.4,46,0.207,95.1,5,80.3,-8.3,0
169.6,36.2,28,0.132,-114.8,0,79.4,15,0
87.1,28,50,0.361,12.8,8,77.8,21.2,0
102.8,20.4,20,0.311,54.7,5,79.5,24.1,0
127.6,24.4,9,0.298,-29.7,2,63.8,0.6,0
87.7,31.2,34,0.254,137.3,3,49.6,21.2,0
177.5,26.9,46,0.925,252.3,1,107.3,22.4,1
113.4,30.3,40,0.487,59.7,8,55.3,3.8,0
144.8,37.3,45,0.116,204.4,5,102.5,0.5,1
127.5,29.9,16,0.234,209.6,2,55.3,34.4,1
150.7,39.4,24,0.451,198.5,2,54.8,33.8,1
167.9,23.4,4,-0.009,-36.4,3,80.7,18.2,1
100,33.2,22,0.455,6.2,13,84.5,7.1,1
91.1,28.7,15,0.229,-4.9,7,60.9,7.9,0
80.8,23.2,32,0.399,210.4,2,89.1,24.6,0
120.9,16.9,19,0.715,240.7,5,83.5,14,0
109.9,27,44,0.583,53.1,3,79.6,25.7,0
96,44.9,36,0.473,249.9,7,67.3,29.1,0
88.9,27.2,8,0.873,-138.3,6,53.2,4.8,0
115.1,34,40,1.055,121.2,7,57.6,31.9,1
125.6,28.5,32,0.45,102,5,59.3,8.6,0
143.4,19.3,26,0.982,-231.3,1,82.1,-5.9,0
198.9,12.6,49,0.984,185.4,3,75.8,6.1,1
145.3,23.6,30,0.799,-48.1,3,72.1,-1,1
155.9,34.6,16,0.455,-9.2,2,70.5,9.1,0
149.9,26.7,44,0.456,178.4,2,59.4,2.1,0
138.3,39,56,0.896,108.7,3,76.4,20.1,1
164.9,39.1,24,0.243,237.2,5,64.6,39.5,1
109.4,29.9,28,-0.177,179.4,0,58.2,8.6,1
142.8,31.5,33,-0.084,69.9,0,74.8,26.4,1
120.5,47.3,39,0.667,96.4,3,87.4,38.1,0
82,39.9,39,0.787,133.6,0,46.7,49.7,1
128.6,21.4,37,0.35,-132,0,38.5,24.8,0
119.6,30.1,36,0.668,-161.8,3,53.3,0.8,0
104.6,31.1,30,-0.01,24.4,11,49,-6.5,0
129.3,36.5,38,0.1,194.8,1,47.4,10.8,0
117.7,37.4,40,0.463,187.3,4,86,-2,0
73.8,37.8,18,0.37,68.7,2,60.4,42.8,0
45.1,38.6,58,0.478,77.8,6,103.7,1.5,0
123.6,30.6,39,0.523,155.9,2,69.9,9.8,0
101.1,30.9,31,0.083,260.6,3,42.7,38.1,1
98.6,35.8,33,0.553,99.7,2,69.8,53,0
53.9,32.5,38,0.123,-77.6,11,61.9,53.8,0
137.1,32.6,38,0.68,215.7,5,71.7,23.3,1
161.6,38.1,22,0.26,118,2,61.8,5.2,1
113.2,35.2,44,0.473,318.6,4,129.7,36.5,0
135.9,28.3,2,0.419,100.5,10,42.8,51,1
113.5,37.4,5,0.516,40.5,6,70.7,2.2,0
149.4,37.2,40,0.803,206.6,4,43.2,-1.7,1
161.5,37.3,34,0.327,83.6,4,62.6,9.3,1
185.9,33.7,26,0.04,-3.5,6,83.4,17,1
122.6,29.7,21,0.9,122.9,12,54.6,18.3,0
147.5,30.2,18,0.157,91.6,5,67.2,36.6,1
150.8,34.4,33,0.387,143.4,7,70.2,27.7,1
111.3,21.4,22,0.723,131.4,9,70.1,34.3,0
160.7,39.5,26,0.409,94.9,0,78,36.9,1
106.6,46.8,30,0.403,52.6,1,76.9,20.8,0
170.8,36.6,39,0.397,-82.6,3,52.8,35.7,1
120.1,44.5,41,0.746,106.5,5,81.4,35.3,0
99.7,35.7,62,0.44,50.6,1,41.5,39.5,0
122.8,34.2,53,1.298,-22.2,7,80.9,26.9,1
135.4,31.8,51,0.673,119.9,8,86.1,27.9,1
130.9,45.2,39,0.441,-18.3,3,49.1,22.3,0
128.8,16.6,33,0.685,99.5,1,93.2,9.4,0
84.2,23.9,33,0.795,214.3,5,46.4,10,0
94.1,30.7,14,0.507,154.4,3,77.8,5.5,0
77.4,27.2,46,0.81,27.6,8,62.8,44.7,0
135.5,28.6,42,0.215,-27.6,0,73.9,19.6,0
118.7,28.9,49,0.33,-3.2,8,96,25.9,0
68.8,27.5,40,0.476,258.7,0,81.9,10.5,0
160.7,31.4,44,0.256,-82.1,0,57.5,4.1,0
157,42,36,0.129,66.4,1,96.6,25.6,1
135.7,29,11,0.216,-48.4,5,70.8,7.7,1
109.3,43.7,22,0.167,53.7,1,60.9,29,1
173,18.7,33,0.484,70.3,3,62.5,36.6,0
107,31,33,0.505,60.4,7,68.8,23.3,0
119.5,24.5,24,0.123,102.2,1,48.8,24.3,0
136.8,18.8,52,0.481,67.9,7,70.3,10.8,0
186.8,23.9,32,0.75,-43,3,76.3,58.9,0
94.2,31.6,40,0.497,-58.3,5,71,27.6,0
154.9,39.6,37,0.572,-46.3,3,73.2,14.1,1
123.9,25.8,50,1.18,35.2,5,64.6,40.7,1
134,32.6,31,0.512,-35,6,55.4,29.1,0
124.9,40.2,33,0.808,-26.1,6,64.7,23.6,0
123.2,39,11,0.577,-91.9,8,31.5,4.4,0
70.8,44.3,19,0.508,18.4,0,62.6,31.1,0
115.5,39.1,29,0.472,35.7,5,105.1,26.3,0
126.8,27.4,25,0.953,-47.9,1,67.1,13.7,0
179.7,14.3,37,0.705,-48.9,2,77.2,46.6,1
93.4,20.2,44,0.973,41.5,0,96.6,17.3,0
154.7,31.7,29,0.321,249.4,9,28.4,5.5,1
174.3,29.2,18,0.471,67.5,3,59.9,15.5,0
107.3,34.5,24,0.374,63.4,8,76.1,18.7,0
137.1,35,45,0.637,286.3,8,68.2,13.9,1
147.5,35.9,32,-0.017,-130.7,5,83.6,33.4,1
82.4,39.8,27,0.598,127.9,1,57.8,-12.7,1
93.5,18.5,38,0.49,185.1,5,56.9,26,0
109.3,36.6,36,0.144,80.3,4,63.2,34.8,0
172.4,29.2,29,-0.272,65.2,2,27.9,25.1,1
138.7,26.5,29,0.151,167.7,0,63,51.7,1
122.5,35.5,31,0.082,76.2,5,49.6,26,0
158.3,40,16,0.148,-105.6,7,80.6,31.8,1
94.6,23.3,34,0.503,-18.2,4,81.2,24.1,0
89.8,16.2,30,0.524,50.1,2,55.9,32,0
119.4,32.9,22,0.265,98.8,0,45.1,15.2,0
157,33.4,49,0.427,44.3,0,58.1,43.5,0
130.8,37.5,41,0.467,56.4,4,81.8,27.8,0
135.8,33.2,25,0.384,-28.3,7,29.1,17,0
192.6,29.4,21,0.464,228.3,3,80.7,22.1,1
109.8,55.6,34,0.293,23.7,5,76.8,32.9,1
125.2,21.3,39,0.368,47.1,0,58.1,8.9,0
119.9,21.1,34,0.511,-48.8,2,52.7,35,1
45.2,29.4,15,0.328,177.4,2,71.6,7,1
179.2,38.8,45,0.032,-46.6,7,65.3,16.4,0
131,22.6,42,0.476,135.1,2,78.8,9.2,0
149.6,40.5,43,0.64,152.9,0,84.9,16.1,1
123.8,29.9,18,0.292,155.7,9,57.2,6,1
164.6,25.4,56,0.487,-21.6,7,101.2,-2.5,0
167.8,29.9,49,0.344,-101.4,6,86.6,54,0
172.7,37.2,30,0.298,46.1,1,63.8,-20.2,1
126.4,31.8,61,0.72,24.8,6,45.7,10.9,1
65,42.8,40,0.082,73,7,78.4,26.6,0
95.3,27.2,34,0.774,-15.3,0,90.7,5.6,1
153.3,33.8,43,1.046,159.2,6,51.6,9.4,1
140.3,43.5,48,1.234,115.8,4,88.1,20.8,1
119.1,24.1,44,0.116,138.9,0,89.8,4,0
146.3,20.1,28,0.859,-12.6,4,59.9,-16.5,0
130.2,35.2,21,0.659,-11.5,0,69.1,9.6,0
189.8,20.3,41,0.796,-147.6,0,79.7,12.8,0
132.5,40.5,29,0.119,-233.9,4,51.4,25.5,0
127.9,21.6,52,0.827,177.6,0,61.3,11.7,1
108.6,23.6,38,0.546,122,2,93.5,23.5,0
38.9,27.2,32,0.789,45.4,3,56.4,31.1,0
107.6,27.5,25,0.654,18.7,0,80.8,9.3,0
131.7,34.8,46,0.815,13.9,3,44.5,47.3,1
134.2,42.5,29,-0.206,256.1,4,71.5,21.4,1
140.3,36,16,0.829,19.2,2,101.8,35.2,0
110.9,18.1,35,0.648,70.7,0,54,0.4,0
127.5,38.1,44,0.228,107,6,59.3,18.1,1
184.7,33.5,43,0.327,84.8,0,68.5,39.6,1
184,41,41,0.487,11,3,80.6,7.9,1
149,24.6,13,0.136,-111.5,0,90.5,17.3,1
127.6,40.7,47,0.303,232.8,5,69.1,27.6,0
78.2,26.1,32,0.671,37.2,3,87.4,43.1,0
144,41.5,29,0.369,116.6,3,59.4,46.9,1
115,24.8,38,1.076,89.3,8,60.7,12.6,0
100.3,30.9,53,0.089,268.3,0,64.6,33.9,0
139.9,34.1,15,0.59,-37.6,13,64.9,23.5,0
86.6,28.4,19,0.794,49.9,6,56,12.5,0
159.6,24.7,13,0.604,-51.3,2,86.3,7.4,0
147.4,26.9,49,0.907,25.8,3,53.2,23.7,1
155.5,21.1,43,0.033,-18.9,0,109,21.4,0
128.3,26.9,45,-0.224,83.1,11,61.7,20.8,0
141.2,25.9,33,0.787,102.4,5,62.4,25.5,1
122.7,42.9,41,0.39,-201.4,6,83.4,5.8,0
61,23.4,43,0.119,27.2,5,92.3,20.2,0
118,27.9,51,0.822,69.1,0,54,29.8,1
99.4,38.7,37,0.567,155.1,5,52.8,15.3,0
191.2,22.9,28,0.822,61.7,1,43.9,29.1,1
151.6,42.5,34,0.815,-38.8,4,56.1,23.3,1
143.5,40,22,0.888,25.4,0,65.8,-2.9,0
121.1,34.2,31,0.647,43.8,4,41.6,21.2,0
95.5,28.6,32,0.533,-109.4,0,63.3,28.1,0
131.8,38.7,47,0.634,77.7,0,51,13,0
129,33.7,33,0.42,152.5,5,74.7,25.4,0
104.6,24.3,38,0.608,54.7,2,112.3,8.4,0
114.5,34,20,0.509,286.7,7,81,30,0
124.4,39.2,31,0.33,91.7,7,75.3,31.3,1
60.3,40.9,59,0.911,43.5,1,74.3,4.7,1
142.8,28.1,44,0.92,-153.7,5,55.7,-2.1,1
102.5,30.4,44,-0.032,200.8,11,80.4,29.2,0
120.6,23.2,39,0.597,164.1,13,82.8,27.3,0
167.9,21.9,20,0.346,4.7,6,63,48.3,1
166.6,37.8,29,0.674,173.3,0,75.6,31.8,0
127.5,43.8,46,0.198,94.3,1,80,6.6,0
148.7,34.9,44,0.422,-87.5,10,65.7,42.5,0
133.9,37.1,53,0.582,241,0,85.6,16.6,1
117,32.1,37,1.017,-133.2,4,55.4,39.2,1
108.3,35.4,29,0.69,196.7,2,69.9,-2.2,0
130.2,38.4,27,0.84,-158.4,0,42.6,12.7,0
121.6,31.4,32,0.709,25.7,0,45.4,54.3,0
50.4,30.7,49,0.63,-15.4,4,85.4,39.8,0
94,37.7,36,0.834,239.9,3,41.5,26.8,1
174.3,37.1,36,1.262,-39.6,7,58.2,21.3,0
123.7,43.4,23,0.293,-103.2,5,60.3,27.3,1
88.8,29.3,44,0.412,151.9,6,62.3,-4.5,0
150.6,33.3,44,-0.194,-110.3,0,52.3,37.2,0
138,31.7,34,0.721,45.3,5,71.7,-14.5,0
109.5,42.2,29,0.423,10.2,2,90.4,16.2,0
90.3,8.7,27,-0.179,-129.7,7,82.5,-10.2,0
146.5,35.4,24,0.712,-107.1,0,41.6,2.7,0
147.4,22,20,0.156,102.5,3,85.4,9.1,1
82.3,28.2,33,0.162,111.5,10,57.8,21.1,0
161.3,27.1,24,0.105,124.3,6,65.9,20.9,1
158.7,38.4,17,0.46,89.7,6,64.3,9.8,0
106.5,18.5,32,0.264,130.4,0,60.1,4.4,0
88.1,37,28,0.605,-52.7,4,36.2,12.3,0
104.8,36.1,35,0.399,171.6,4,78.4,32.1,0
117.7,29.5,36,0.318,119.5,7,84.4,13.7,0
81.1,31.2,31,0.819,30.8,3,82.1,12.1,0
114.8,44.5,49,0.662,105.4,0,78.7,20.7,1
126.2,27.8,32,0.394,110.8,8,75,-6.7,0
90.5,19.8,24,0.638,120.5,2,73.1,7.6,0
77,21.1,23,0.922,-79.4,8,93.3,16.8,0
118.1,27,32,0.67,75.3,7,90.5,25.2,0
129.3,31.2,36,0.086,120.6,4,51.7,54,0
90.3,25.1,35,-0.185,-16.8,0,49.7,17.5,0
129,39.9,41,0.843,141.4,2,89.1,11.8,1
101,43,41,0.524,160.1,7,42.1,18.1,1
84,32.5,25,0.9,133.2,1,67.6,0.3,0
120.6,35.7,35,-0.185,35.1,5,73.7,38.1,0
80.8,35.5,25,0.516,120.1,6,57,22.5,0
84.3,21,38,0.433,-112.7,1,68.3,44.4,0
150.6,37.6,13,0.419,128.2,5,75.8,15.8,1
172,42.6,31,0.128,309.4,2,90.6,50.1,1
91,33.7,29,0.621,110.1,10,79.1,19.4,0
153,29.5,28,1.189,-21.1,2,68.7,2.7,0
56,39.5,24,0.272,30.4,0,47.5,22.1,0
191.2,37.1,41,-0.046,70.5,0,82.6,15.9,1
120.4,30.9,26,-0.051,139.9,0,45.4,14.8,1
98,33.5,43,0.533,95.9,4,84.2,-10,0
130.2,24.6,19,0.452,28.7,6,88.8,-17.7,0
117.1,46.2,42,0.928,84.9,0,46.5,30.9,1
148,26.1,29,0.537,-128,2,98.6,54.5,0
116,45.3,27,0.183,-184.2,7,60.8,57,1
129.2,33,12,0.946,31.6,3,26,34.4,0
148.9,27,33,0.581,184.2,4,100.7,15.7,1
101.1,28.1,4,0.185,189.3,5,52.4,25.2,1
58.8,29.4,38,0.682,-15.4,7,103.5,12.8,0
141.6,19.9,11,0.654,78.8,4,56.9,15,0
143.7,44.5,30,-0.092,220.6,6,81,22.6,1
189.2,32.2,38,-0.159,7.5,1,67.5,25.3,0
97,44.6,21,0.304,101.5,0,78.9,29.8,1
110.7,45.9,33,0.546,-36.4,0,56,14.5,1
105.8,37.4,6,0.079,-136,8,57.3,11.4,1
86.4,38.4,28,0.527,-160,8,75.5,28.5,0
156.6,30.2,31,0.691,123.4,3,68.9,11.6,1
141,38.6,33,1.075,-102.8,3,100.6,13,0
71.5,42.1,38,0.059,163.7,0,42.6,17.3,0
105.1,23.4,28,0.122,81.4,4,82.3,12.4,0
79.5,21.7,30,0.963,172.4,1,86,1.1,0
150.1,28.8,41,0.66,42.6,5,47.8,18.6,1
152.2,62.5,40,0.484,-42.1,7,36.6,6.9,1
130.4,22.6,49,0.816,9.1,2,43,-2.7,1
132.9,36.3,36,0.543,10.1,5,40.1,19.9,0
164,41.6,27,0.344,233.7,10,39.6,12.9,1
126.7,40.8,23,0.668,40.1,12,76.3,17.6,1
109.5,39.6,40,0.096,99.8,0,53.7,-1,0
79.7,26.5,22,0.63,166.8,3,46.8,32.7,0
58.7,17.1,41,0.673,187.4,3,44.1,11.6,0
136.7,25.9,25,-0.007,-59.5,7,76.8,1.1,1
87.1,27.4,39,0.068,55.4,0,44.2,26.5,0
146.7,23,24,0.72,29.8,2,78.1,22.9,0
153.2,37.6,26,0.416,68,0,49.6,35.4,0
71.9,39.2,36,0.41,137.2,5,91.2,13.4,0
112.8,29.8,53,0.769,-31.5,3,54.7,20.1,1
126.2,48.9,12,0.797,125.7,1,65.4,11.9,0
121.3,39.3,16,0.892,32.4,9,76.1,39.7,0
136.9,39.9,33,0.183,153.3,6,108.3,-12.2,0
114,39.7,19,0.383,320.2,9,51.6,42.8,1
155.6,37.6,37,0.538,-23.9,2,82.4,22.3,0
175.7,29.3,6,0.35,108.5,5,69.7,6.9,1
165.1,26.8,41,0.366,-61.1,9,20.7,6.4,0
133.2,29.1,41,0.429,25,11,64.4,17.6,0
87.8,26.2,40,0.649,77.7,1,81.6,-7.1,1
110.1,30,23,0.514,1,1,102.9,32.1,1
156.5,32.3,43,0.723,218,12,64.5,24.5,1
119.1,5.5,18,0.473,151.8,2,90.4,40.9,0
108.4,42.6,52,0.621,-33.4,9,65.8,14.4,1
124.4,27.9,45,0.726,220.1,6,53.9,17.9,1
147.3,28.9,65,0.39,12.6,8,83.2,20.1,1
114.1,35.2,42,0.722,45.3,5,85,32.7,1
28.4,25.3,24,0.394,100.6,7,80.7,18.5,0
121.7,45.2,26,0.57,260,5,30.2,26.5,1
109.4,31.2,45,0.625,49.6,7,77.3,22.2,1
130,33.9,29,0.318,82.9,1,45.1,41.3,0
113.8,31.8,32,0.478,82.6,4,53.7,35.4,1
100.2,39.8,12,0.12,194.1,3,56.3,26.5,1
89.6,32.6,9,0.321,5.3,6,85.6,6.8,0
169.3,27.6,10,-0.315,257,4,56.7,8.5,1
88.2,42.1,32,1.061,57.1,0,85,14.6,1
113.9,43.8,30,0.853,79.4,1,78.6,10.9,1
157.8,39.2,34,0.671,144.9,3,86,16.9,1
139.5,24.9,34,0.607,-10.7,2,58.9,32.2,0
99.5,35.3,50,0.589,-104.8,4,88.9,16,0
154.5,36.7,38,0.386,22,3,70.4,29,0
133.9,29.8,34,0.601,-105.6,1,54,17.4,0
113.1,30.2,24,0.696,113.5,0,69.5,2.7,0
172.5,28.7,29,0.503,58.8,4,98.7,24.4,1
146.5,40.6,22,1.033,161.1,7,52.9,33.9,0
133.9,28.1,58,0.663,54.6,5,86.6,38.9,1
139,41.3,49,0.069,26.4,1,71.2,43.9,0
141.2,24.3,30,0.816,21.2,4,75.2,-8.3,0
145,34.7,39,0.154,-6,2,74.1,21.9,0
125.4,45.6,48,0.239,7.1,10,63.4,42.9,1
169.6,28.1,30,0.504,-17,1,61.8,34.5,1
108.2,30.6,28,0.026,253,0,57,29.8,1
79.7,36.7,47,0.193,106.3,0,79,22.2,0
128.1,42.4,38,0.921,155.2,0,74.3,28.6,1
78.2,42.1,34,0.598,-20.9,4,75.1,15.6,0
124,16.2,48,0.109,-168.8,1,53.5,29.5,0
94.2,34.3,23,1.204,144.8,11,50.1,31.4,0
92.9,36.5,41,-0.05,-48.7,0,40.7,9.1,0
92.7,21.3,34,0.655,-69.5,2,69.4,17,0
100.4,38.2,42,0.699,57.5,11,102.3,14.3,1
117.7,41,24,0.605,86.6,1,64.8,-4.5,1
105,17.1,58,0.97,222.4,5,88.1,41,1
151.7,38.9,23,0.614,19.3,0,47.4,27.4,1
152.8,21.8,52,0.956,36.8,2,67.7,36.3,1
109.6,23.7,37,-0.211,96.4,8,74.8,33,0
135.8,37.5,35,0.196,54.2,4,92.9,46.5,1
133.6,26.4,25,0.408,239.7,5,67.9,8.3,0
147.5,34.2,32,0.504,273.9,3,101.1,40.4,1
122.6,38.6,32,0.197,49.2,1,78.7,20.7,1
138,38.2,-1,0.573,-127.2,4,52.3,22.2,0
162,19.2,35,0.444,-137.6,6,69.7,12.4,0
99.3,56.1,29,-0.124,-27.1,3,61.7,19.2,1
89.6,36.1,28,0.021,-13.8,2,85.1,28.3,0
110.9,32.1,35,1.143,9,5,82.8,5.3,0
126.7,33.2,28,0.657,198.3,8,65.4,23.5,0
191.5,23.7,35,0.764,97.3,6,72.3,32.6,1
159.5,30.3,35,0.452,33.6,4,47.5,32.4,0
172.1,44.8,47,0.152,254.8,1,68,50,0
88.8,38.3,36,0.42,-20.7,5,60.2,37.2,0
157.7,21.7,27,0.365,-55.9,0,70.7,17.2,0
71.4,28,39,0.072,-26.2,9,94,-5.4,0
80.5,34.8,20,0.387,28.1,6,21,-14.7,0
84.2,39.6,31,-0.094,136.7,6,64.3,15.2,0
134.1,41.1,35,0.646,74.5,3,51.6,24.6,1
112,30.2,43,0.631,180.1,0,79.6,11.1,0
96.8,25.6,46,0.743,-2.4,0,69.3,13.1,1
170.8,21,13,0.386,81.2,4,83.3,53.7,0
110.7,27.9,14,0.55,178.1,3,91.4,21,0
166.4,34.5,21,0.26,-96.4,0,74.1,34.4,1
179.6,31.6,30,0.104,193.5,5,57.7,31.5,1
137.8,18,41,0.515,35,2,102.2,45.1,0
175.8,23.4,26,0.769,-59,1,34.7,50.1,0
152.9,35.4,35,0.332,34.2,6,55.5,40.1,0
106.2,25.4,47,0.422,143.8,2,26.2,29.3,0
80.6,40.1,16,-0.145,115.4,5,71,1.1,1
147.7,21,28,0.21,36.6,7,57,29.5,0
141.8,19.2,20,0.343,11.9,5,32.3,32,0
143.3,30.7,18,0.472,18.2,6,67.4,32.2,0
108,42.8,8,0.135,136.4,0,83,1,1
123.8,25.1,28,0.528,68,3,109.9,20.6,0
91.9,39,42,0.874,285.5,1,89.1,38.7,0
121,33.8,0,0.281,285.6,0,58.8,25.1,1
138.3,44.2,14,0.484,178.9,0,68.2,50.7,0
160.5,36,4,0.427,124.4,3,67.8,69.8,1
114.6,24.7,36,0.366,44.4,4,83.7,24.3,0
85,31,38,0.316,212.1,6,50.2,25.6,0
180.5,43.7,32,0.766,2.5,0,79.5,24.4,1
136.4,31.8,37,0.301,134.4,7,67.9,33.5,0
67.9,26.1,49,1.051,108.8,3,44.9,26.3,1
144.4,20.9,39,0.632,130.7,0,79.3,-3.5,1
165.7,33,20,0.914,212.7,2,110.9,4.4,0
130.4,40.9,8,0.8,72.6,4,48.5,25.8,0
87.7,24.7,28,0.065,260.9,0,54.7,15.4,0
121.1,37.9,42,0.37,35.8,4,84.6,31.7,1
105.5,16.6,57,0.784,110.3,5,59.1,4.5,1
111,30.3,26,-0.011,44.1,6,59.6,20.9,1
58.9,30.4,32,0.065,-118.9,5,53.6,28.3,0
108.4,36.7,29,-0.027,70.1,3,81.5,13.3,1
109.2,38.4,46,0.721,199.3,5,83.6,34.6,1
133.1,32.5,35,1.264,81.6,3,62.1,20,1
128.3,23.5,11,0.567,-104.7,5,71.7,38.9,0
171.1,34.8,27,0.082,-11.1,4,29.7,21.7,1
120.6,36.8,29,0.504,-4.7,2,35.3,22.5,1
167.5,33.2,37,0.146,244.6,1,84.2,22.2,1
92.2,39.7,33,0.529,132,4,61.8,28,0
108.9,32.5,26,-0.022,2.6,2,69.3,39.5,0
70.3,33,9,0.125,21.7,0,33.7,23,1
123.3,31.1,24,1.181,61.5,1,100.9,30.3,0
109.9,40.9,35,0.682,107,0,87.5,23.1,1
90.7,26.3,44,0.348,85.3,6,71.4,-3.9,1
140.1,39,43,1.004,121.9,6,99.2,15.8,1
173.1,45,42,1.077,178,1,90.6,25.7,1
133.4,33.2,48,0.652,-0,5,82.9,8.9,1
108,29.1,26,0.585,197,10,91.7,36.9,0
155.3,42,29,0.699,117.1,3,60.4,12.4,1
113,22.7,39,0.463,92.2,5,82.8,11,0
117.8,19.9,9,-0.17,256.7,0,78,44.1,1
107.3,44.2,53,0.782,352.8,6,55.2,28.9,1
107.8,22.3,19,1.234,18.3,4,56.5,22.8,0
114.1,29,20,0.007,-4.3,5,108.7,37.6,1
176.1,35.7,32,0.038,82.1,0,63.6,46.8,1
131.4,40.6,29,0.022,27.2,3,92.3,52.4,1
99.4,29.5,32,0.362,-60.4,4,76.3,27.1,0
85.6,31.3,14,0.78,-34.3,3,61,11.6,0
90.1,19,52,0.564,113.9,11,67.6,29.8,0
122.5,41.1,39,0.584,54.2,5,91.7,-12.2,0
118.1,29.1,30,-0.171,167.8,1,65.3,13,0
71.9,28.9,13,0.17,47.5,4,70.7,18.8,0
186.1,35.5,20,0.279,8.2,3,58.2,7.3,1
171.5,32.6,30,0.398,58.9,9,78.7,39,1
28.5,34.7,45,1.133,87.4,0,80.9,11.5,1
68.3,27.6,45,0.878,167.1,0,117.5,2.4,0
119.8,21.4,48,0.629,186.4,4,68.4,23.9,1
65.5,39.7,43,0.353,83.1,5,99.6,28.1,0
123.5,28.5,17,0.287,93.1,3,71.3,33.1,1
135.4,34.4,41,0.546,81.6,6,37,41.3,1
83.7,38.6,34,0.851,89.5,1,90.3,24.2,0
126,33,45,0.756,112.3,0,62.3,23,1
176.4,35.3,33,0.882,73.3,4,73,-2.6,1
151.3,35.6,30,0.111,110.8,9,57.9,4.4,1
135.3,20.4,9,0.342,7.1,3,59.6,26.7,0
116.1,27.9,29,0.697,196.8,7,83.3,-31.3,1
92.7,30.1,36,-0.044,250.3,5,58.3,24.1,0
112.4,26.7,39,0.34,-75.4,2,68,4.2,0
160.7,24.3,53,0.785,-21.2,4,92.6,18.4,1
87.1,33.3,56,-0.001,151.2,4,68,15.3,0
113.4,40.3,40,0.163,267,0,82.9,24.5,0
159,35.2,45,0.485,199.9,5,111.2,10.5,1
159,36,36,0.307,139.7,0,44.4,33.1,0
76.5,43.3,31,0.577,97.2,5,65.1,15.8,0
119.5,40.4,46,0.915,130.7,3,38.5,32,1
148.5,29.5,43,0.92,99.6,8,76.3,-6,1
109.1,29.5,40,0.21,38.3,1,69.7,22.8,0
152.5,38.6,36,0.575,101.4,4,99.8,-18,0
118,34.9,46,0.134,128.7,7,62,-8.8,0
112.5,23.6,41,0.215,293.6,5,55.2,13.7,0
90.5,35.5,50,0.424,195.2,1,76.3,58.6,0
81.1,41.8,47,-0.125,-76.1,1,88.9,14.9,0
118.3,37.9,35,0.57,51.9,8,55.7,48.5,0
113.1,26.6,41,0.644,-139,5,44.8,8.4,0
146.8,26.1,38,0.369,310.8,4,48.1,4,0
96,33.5,34,0.813,107.2,4,76.5,19.5,1
131.8,38.4,42,0.312,-115.7,1,75.6,-18.3,1
)qcsv";

const char kHeartCsv[] = R"qcsv(age,sex,cp,trestbps,chol,fbs,restecg,thalach,exang,oldpeak,slope,ca,thal,disease
52,F,1,127,204,0,2,138,1,1.1,1,0,3,yes
62,M,4,128,319,0,2,140,0,0.9,2,0,6,yes
63,M,4,88,293,0,0,129,1,1.6,2,2,3,yes
62,M,4,147,253,0,2,149,0,1.4,2,0,7,yes
61,F,4,132,295,1,2,146,0,0.0,1,0,7,no
51,M,3,131,264,0,2,147,0,1.2,1,0,3,no
50,F,3,136,235,0,2,149,0,0.7,1,0,7,no
62,M,4,114,252,0,0,139,0,2.6,2,0,7,yes
43,M,4,130,380,0,1,193,1,3.7,1,0,6,yes
53,M,4,148,297,0,0,150,1,0.0,1,0,7,yes
37,M,2,149,299,0,0,151,0,0.0,2,0,7,yes
50,M,4,139,228,0,2,147,1,0.2,2,0,7,yes
47,M,4,126,277,0,0,168,0,0.4,1,0,7,no
43,M,1,118,359,0,2,154,1,0.3,1,?,3,yes
59,M,4,153,269,0,2,143,0,1.2,2,0,3,no
47,F,3,140,301,0,2,150,1,2.3,1,0,7,yes
50,M,3,124,310,0,0,156,0,0.0,2,2,7,yes
51,M,2,95,279,0,2,160,1,0.0,1,2,6,yes
47,M,4,117,326,0,2,164,0,0.0,2,3,3,yes
66,M,4,99,259,0,0,107,0,2.3,1,2,7,yes
49,M,4,152,272,0,0,132,1,2.6,2,0,3,yes
55,F,4,134,216,0,0,96,0,0.0,2,0,3,no
42,M,4,119,378,0,2,175,0,0.0,1,1,3,no
50,M,4,126,263,0,0,175,0,1.2,3,1,7,yes
51,M,4,174,253,0,0,178,0,2.3,1,3,7,yes
51,M,3,151,316,0,2,155,0,2.2,1,0,6,yes
49,M,4,109,223,0,2,176,0,1.3,2,2,3,no
55,M,2,129,247,1,0,148,1,1.9,2,3,3,yes
67,F,4,111,209,1,2,137,1,1.5,1,3,3,yes
53,M,3,102,249,0,0,120,1,0.5,2,1,3,no
52,M,4,134,228,0,2,135,1,3.2,2,1,3,yes
50,M,4,171,274,0,0,141,0,1.1,3,3,3,yes
76,F,1,157,241,0,2,150,1,0.0,3,0,3,no
68,F,4,132,218,0,0,171,1,0.6,2,1,7,yes
59,M,1,125,233,0,0,136,0,0.0,2,0,7,yes
60,M,3,134,242,1,0,152,1,1.1,2,0,6,yes
47,F,2,148,222,0,2,161,0,2.3,2,0,3,no
52,M,1,107,294,0,0,136,1,0.0,1,1,3,yes
56,F,3,100,281,1,2,114,0,2.3,2,0,3,yes
55,M,3,162,255,0,2,134,1,3.4,1,2,7,yes
46,M,2,136,189,0,2,127,1,1.5,1,0,3,no
47,M,4,158,273,0,0,149,0,0.0,1,0,7,no
58,M,3,135,184,0,2,143,0,0.2,1,0,3,no
56,M,4,156,257,0,0,144,0,0.7,2,0,7,no
35,M,4,121,250,0,0,161,1,0.0,2,2,3,yes
55,F,3,139,218,0,0,158,0,0.0,2,3,7,no
65,F,1,157,206,0,0,122,0,0.8,1,1,3,yes
48,M,4,148,213,0,0,172,0,0.9,2,0,7,no
56,F,2,123,349,0,2,114,1,1.8,1,2,3,yes
41,M,4,146,234,0,0,161,0,0.0,1,0,3,no
61,F,4,120,237,0,2,152,1,3.2,1,0,3,yes
44,M,3,107,295,1,0,142,0,2.3,2,1,3,yes
43,M,2,140,268,0,2,126,0,2.1,3,0,7,yes
51,M,3,154,299,0,0,165,0,0.4,1,0,3,no
75,M,1,145,187,0,0,119,0,3.0,1,0,7,yes
48,M,4,110,194,0,0,170,0,0.7,2,2,6,yes
43,M,4,146,411,0,0,174,1,3.1,2,0,3,yes
58,M,2,142,245,0,0,146,0,2.3,1,0,3,yes
56,M,3,123,233,0,2,148,1,0.1,2,0,3,no
68,F,2,89,255,0,0,158,0,0.6,1,1,6,yes
43,F,4,148,296,1,0,166,0,3.2,3,0,3,yes
40,F,2,146,189,0,0,142,0,2.2,1,3,3,yes
51,M,2,139,261,0,2,155,1,0.9,2,0,3,no
57,M,3,102,246,0,0,158,0,1.3,2,2,3,yes
57,F,4,106,280,0,1,151,1,1.3,2,1,7,no
63,M,4,148,256,0,2,146,0,0.3,2,0,3,yes
41,M,3,145,221,1,0,157,0,0.9,2,0,3,yes
46,M,4,139,205,0,0,153,1,0.4,1,0,3,no
53,M,3,127,128,0,0,132,0,0.6,1,0,7,no
61,M,2,138,296,0,2,115,0,1.6,2,0,3,yes
58,M,4,122,175,1,0,169,0,0.1,1,0,3,no
50,F,1,126,228,0,2,140,1,1.9,2,0,3,no
45,M,4,116,329,0,0,161,0,1.2,2,0,3,yes
62,M,4,135,227,0,0,113,0,1.9,2,0,3,yes
62,M,2,124,277,0,2,146,1,2.1,2,0,7,yes
78,M,4,147,237,1,2,114,1,2.5,1,3,7,yes
52,M,4,143,282,1,0,210,1,1.8,2,0,3,yes
68,M,1,117,249,1,2,118,0,1.9,1,0,7,yes
43,M,3,162,222,0,0,139,0,0.9,2,1,3,yes
49,F,3,112,314,0,2,172,0,1.7,2,1,3,no
48,M,3,139,234,1,2,177,0,0.1,2,3,7,yes
50,M,3,149,182,0,2,111,1,0.8,2,0,3,yes
46,M,3,153,231,0,2,161,0,1.9,2,0,7,yes
49,F,1,94,274,1,2,171,0,1.0,1,1,3,yes
53,M,3,148,193,0,2,126,0,1.6,2,1,3,yes
50,F,3,152,286,0,2,166,0,0.0,1,1,7,no
60,M,4,155,285,0,0,134,0,2.6,2,3,7,yes
53,M,4,93,351,0,2,130,0,0.5,1,3,3,yes
54,M,4,120,216,0,0,142,1,1.5,2,0,3,no
67,M,4,129,280,1,2,130,0,1.1,2,0,7,no
57,F,4,123,165,0,2,119,1,2.1,2,3,3,yes
55,F,4,154,227,0,2,193,0,0.7,1,0,7,yes
54,M,3,119,252,0,2,140,1,0.0,1,0,3,no
54,M,1,152,267,0,0,135,0,0.0,2,1,7,yes
59,M,4,141,245,0,0,162,1,0.8,1,0,7,yes
47,F,4,106,243,1,0,154,0,0.0,2,1,7,no
64,M,2,114,217,0,0,168,0,1.7,1,3,7,yes
68,M,3,123,225,0,0,133,0,2.7,1,0,3,yes
64,F,4,133,262,1,0,148,0,0.0,1,0,3,no
49,M,4,148,275,0,0,155,0,0.0,2,0,3,no
40,M,3,128,279,0,2,164,0,1.4,1,0,7,yes
50,F,4,146,296,0,2,148,0,2.5,2,0,3,no
55,F,3,104,306,0,2,147,0,1.4,2,1,3,yes
61,M,1,79,159,0,2,177,1,1.5,1,0,7,yes
52,F,1,125,222,0,2,138,0,1.7,2,0,3,no
51,M,4,139,239,1,2,141,1,1.7,2,1,7,yes
67,M,2,125,216,0,0,132,0,2.9,2,1,3,yes
48,F,4,114,299,0,0,166,1,1.8,1,2,7,yes
63,M,1,138,284,0,0,150,0,0.0,1,0,7,no
62,F,3,164,242,0,0,162,1,0.6,1,0,3,no
42,F,3,129,253,0,2,132,0,1.3,2,1,7,yes
56,M,3,119,309,0,0,153,1,0.2,1,0,7,yes
49,F,2,117,230,1,2,150,1,0.8,3,2,7,yes
45,M,3,164,232,0,0,151,0,0.5,2,0,3,no
37,M,4,130,292,0,0,166,0,0.3,1,2,3,yes
40,M,4,141,270,0,2,122,0,1.9,2,0,3,yes
57,M,2,152,317,0,2,152,0,0.7,1,1,3,no
50,F,4,149,265,0,2,155,1,0.0,1,2,3,yes
56,M,4,115,284,0,2,119,1,0.3,2,3,7,yes
44,M,3,147,221,1,2,156,0,1.1,2,0,6,no
51,F,3,145,201,1,1,183,0,3.4,2,?,3,yes
51,F,1,139,247,0,0,144,1,1.4,1,1,3,yes
40,F,1,148,118,0,0,172,0,2.7,1,1,3,yes
39,M,3,121,267,0,2,157,1,1.7,1,0,3,yes
58,M,2,130,295,0,2,130,0,0.0,1,2,3,yes
55,F,4,122,251,0,2,130,0,1.5,1,0,3,yes
46,F,4,144,237,1,2,148,0,0.2,1,3,7,yes
53,M,3,120,300,0,2,176,0,0.0,1,0,3,no
60,M,4,138,245,0,0,161,1,0.0,2,1,7,yes
70,M,2,112,295,0,2,123,0,3.1,1,0,3,yes
46,M,4,129,354,0,2,176,0,0.0,1,1,3,yes
59,F,3,125,283,0,0,143,1,0.4,1,0,7,no
72,M,4,129,293,0,0,121,1,2.4,1,2,3,yes
54,F,2,133,271,0,0,158,0,1.8,2,1,3,no
67,M,3,128,260,0,2,121,1,0.0,1,0,3,no
31,M,4,127,261,0,2,137,1,1.0,1,1,6,yes
67,M,3,96,251,0,2,165,1,0.5,1,1,7,yes
54,M,1,150,300,0,2,113,1,0.9,1,0,3,no
37,M,3,120,169,0,2,174,0,1.9,3,1,3,no
61,M,4,127,234,0,2,114,1,0.5,2,1,7,yes
63,F,3,117,279,0,2,142,0,0.7,2,0,7,no
64,F,4,148,206,0,2,138,1,2.7,2,1,3,yes
64,F,4,116,242,0,2,133,0,0.0,1,2,3,yes
53,M,4,140,213,0,2,107,0,0.7,2,2,3,yes
47,M,1,151,269,0,0,153,0,1.6,1,2,7,yes
50,F,4,159,290,0,0,152,0,0.0,1,0,7,no
53,M,3,151,318,0,2,132,0,0.4,2,2,3,yes
57,F,3,142,272,1,2,146,0,0.0,2,3,7,yes
49,F,4,111,212,0,0,173,0,1.3,2,0,3,no
54,M,2,153,260,0,2,135,1,0.4,1,2,3,yes
61,F,3,151,275,0,0,149,0,2.0,3,0,3,yes
57,M,3,145,316,0,2,124,0,2.2,2,0,3,yes
74,M,4,145,143,1,0,141,0,1.2,2,0,3,yes
73,F,4,132,265,0,0,147,0,0.7,2,0,3,yes
44,M,2,122,158,0,0,206,1,1.4,2,0,3,no
49,F,2,149,282,0,0,171,0,1.2,1,0,3,no
42,F,1,153,269,0,0,168,1,0.0,1,3,7,yes
43,M,2,113,272,0,0,186,1,2.3,3,?,3,yes
59,F,4,147,290,0,2,126,1,1.4,2,3,7,yes
45,M,4,135,266,0,0,178,0,2.0,2,0,3,no
44,M,4,146,216,0,2,147,0,0.0,1,0,3,no
51,M,3,136,264,0,2,140,0,2.1,3,0,3,yes
61,M,3,150,306,0,2,166,0,3.4,1,0,7,yes
51,M,4,149,242,1,2,157,0,1.8,2,2,3,yes
51,M,4,146,249,0,2,178,0,0.0,2,1,7,yes
62,F,1,108,188,0,0,115,1,1.1,2,0,6,yes
58,M,2,145,304,0,2,152,1,1.0,1,2,3,yes
58,F,4,132,223,0,2,136,0,1.3,2,1,3,yes
62,M,2,112,211,0,2,138,1,0.8,1,0,7,yes
45,M,4,143,226,1,2,119,0,1.6,1,2,3,yes
56,M,1,108,205,0,0,166,0,0.6,3,1,3,no
48,M,4,146,235,0,0,158,0,1.4,2,0,3,yes
63,F,2,160,309,1,0,123,1,0.3,1,2,3,no
61,M,2,123,286,0,2,117,0,1.2,2,0,6,yes
45,M,3,147,317,0,1,140,0,2.2,1,2,3,yes
66,F,4,139,320,1,0,168,0,0.6,2,2,3,yes
43,F,4,142,204,0,2,156,1,1.8,1,2,7,yes
64,M,3,108,271,1,2,135,0,0.1,1,0,7,no
56,M,4,142,320,0,2,158,0,0.7,2,1,3,yes
46,M,4,134,359,0,2,156,0,0.8,3,0,7,yes
44,M,4,144,178,1,2,162,0,2.5,2,2,3,yes
51,M,3,131,178,0,0,167,0,0.2,3,0,7,no
54,F,3,150,270,0,0,156,1,2.4,1,2,7,yes
47,F,1,136,231,0,0,173,0,0.0,1,3,3,yes
59,M,3,143,199,0,2,122,0,0.9,2,0,7,no
41,M,3,154,266,0,0,161,0,2.1,2,0,7,no
54,M,2,134,209,0,0,143,1,1.9,1,1,3,yes
54,F,4,148,137,0,2,152,0,0.0,1,2,7,yes
37,M,3,135,246,0,2,163,1,0.0,1,0,3,no
56,F,2,140,253,0,2,136,0,2.1,2,2,3,yes
43,M,2,123,278,0,0,152,1,0.0,2,0,3,no
32,M,1,145,293,1,2,186,1,1.7,2,0,3,yes
48,F,4,152,256,0,0,144,0,0.5,2,2,7,yes
52,F,4,130,236,0,2,127,0,1.1,2,0,6,no
62,M,4,145,215,0,2,155,1,3.7,3,0,7,yes
49,F,3,139,167,1,2,173,1,2.8,1,1,3,yes
67,M,4,113,226,0,2,134,0,2.0,1,1,3,yes
66,M,3,137,296,1,2,143,1,0.0,3,0,3,yes
63,M,3,154,279,0,0,126,1,1.4,2,1,3,yes
65,M,4,123,347,0,2,137,0,1.2,2,0,?,yes
57,M,4,102,240,1,0,169,1,1.0,2,0,7,yes
49,F,4,135,160,0,0,170,0,2.6,2,0,7,yes
59,M,4,121,287,0,2,149,0,0.0,1,?,3,no
62,M,2,163,298,0,0,138,0,1.4,2,0,3,yes
56,M,4,131,190,0,0,116,1,1.2,1,0,7,yes
52,M,4,131,169,0,0,158,1,0.3,1,0,7,no
40,M,3,121,255,1,0,170,0,3.0,1,2,7,yes
60,M,4,136,282,0,2,166,0,0.0,2,0,?,no
57,M,4,122,193,0,2,187,0,1.1,1,0,3,no
42,F,4,116,231,0,2,167,1,1.2,1,3,3,yes
55,M,4,131,209,0,2,168,0,0.0,1,1,3,no
60,F,4,118,189,0,2,123,1,0.0,2,3,3,yes
53,M,4,154,183,0,0,174,0,0.0,2,0,3,no
61,M,4,112,254,0,2,161,0,2.0,1,1,6,yes
60,M,1,130,229,1,0,172,1,2.1,3,0,3,no
41,F,2,120,214,0,0,174,0,1.8,2,3,3,no
51,F,2,109,120,0,0,161,0,1.4,2,0,7,yes
58,F,3,159,332,0,0,176,1,0.0,2,3,7,yes
62,M,1,96,201,0,0,131,1,1.3,1,0,7,no
66,F,4,156,240,0,2,153,0,0.5,2,1,3,no
37,M,4,108,192,0,0,185,0,2.4,2,1,3,yes
53,F,4,133,265,0,2,135,0,2.6,2,1,3,yes
60,M,1,169,173,1,2,123,0,3.6,1,0,7,yes
65,F,4,96,251,0,2,150,0,1.9,3,3,7,yes
69,M,2,109,238,0,2,141,1,2.0,2,0,3,yes
45,F,4,153,292,0,2,169,1,0.0,1,0,3,no
50,M,1,134,193,0,0,166,1,1.2,1,1,3,yes
44,M,2,122,215,0,2,143,0,0.0,1,0,7,no
61,F,3,131,235,0,0,151,0,2.1,1,1,7,yes
42,M,1,116,349,0,1,182,1,0.0,2,1,7,no
64,M,4,134,175,0,0,135,1,0.8,2,0,7,yes
62,M,2,157,261,0,2,138,0,0.2,2,0,3,no
58,M,4,125,215,0,2,125,1,0.6,2,0,7,yes
34,M,4,134,262,0,0,182,1,1.6,2,1,3,no
48,M,3,152,278,0,0,193,1,0.5,2,1,7,no
60,M,3,165,254,0,0,119,0,1.3,1,2,3,yes
41,M,4,122,259,0,2,175,0,0.0,1,0,3,no
52,F,3,137,260,0,0,169,0,2.6,2,0,6,yes
53,M,4,122,218,0,0,140,1,0.4,2,1,3,yes
62,F,4,121,236,0,2,137,0,2.2,1,2,7,yes
56,M,1,125,166,0,0,128,1,3.5,1,1,3,yes
56,M,3,121,229,0,0,133,1,0.0,1,0,7,yes
50,F,4,103,209,1,0,157,0,0.0,1,0,6,no
54,M,1,98,234,0,2,163,1,0.9,2,1,6,no
53,M,4,119,282,1,0,153,0,2.4,1,2,3,yes
60,M,4,134,265,0,2,162,0,0.5,1,0,3,yes
52,M,4,152,269,0,0,156,1,1.5,2,1,3,yes
63,M,4,123,300,0,0,120,1,0.3,1,1,7,yes
39,F,4,129,130,0,2,191,0,1.7,1,3,7,yes
64,M,4,143,267,0,2,165,0,0.0,2,0,7,no
52,M,3,144,245,0,0,138,1,2.0,2,0,3,yes
64,M,3,130,242,0,0,177,0,0.0,3,0,3,no
54,M,4,131,183,0,2,159,1,0.0,1,0,7,no
61,M,3,163,273,0,2,147,0,3.1,1,1,3,yes
67,M,3,126,302,0,0,177,0,1.3,2,0,7,no
49,M,3,123,296,0,0,106,0,0.1,1,2,3,yes
54,M,3,105,242,0,2,119,1,3.5,2,0,3,yes
52,M,3,139,277,0,0,166,0,2.3,1,2,7,yes
56,M,4,127,291,0,0,144,0,2.3,2,0,7,yes
39,M,4,163,335,0,2,144,0,0.6,1,1,3,yes
52,M,4,126,306,0,2,181,0,1.8,1,0,7,yes
51,F,4,145,253,0,2,162,0,1.6,2,0,7,no
47,F,3,147,251,0,2,131,0,0.0,2,0,3,no
52,F,3,159,254,1,2,139,1,1.7,2,0,3,yes
40,M,4,110,257,0,0,178,0,0.9,1,0,7,no
66,M,2,158,222,0,0,176,1,2.5,2,2,7,yes
58,M,4,132,284,0,2,108,1,2.5,3,3,7,yes
70,F,4,130,213,0,0,143,1,0.4,1,2,3,yes
46,M,4,126,207,0,2,149,0,0.4,1,0,3,no
43,M,4,125,264,0,2,125,0,1.3,1,2,3,yes
56,M,4,126,218,0,2,146,0,1.8,2,2,7,yes
39,F,2,93,234,0,2,131,0,0.6,1,2,3,yes
56,M,1,140,145,0,0,138,0,0.9,2,1,7,no
47,M,4,133,285,1,2,188,0,1.8,1,0,7,no
51,M,4,116,246,0,1,163,0,1.6,2,0,3,yes
56,M,3,131,240,0,0,164,0,2.4,1,0,3,yes
54,F,4,170,269,0,0,162,0,1.3,2,0,7,no
70,M,2,138,256,0,0,145,0,0.1,1,0,7,yes
59,F,3,125,212,0,0,166,0,0.0,2,3,7,yes
42,M,4,160,344,0,0,137,0,2.0,2,0,3,yes
62,M,4,118,224,0,2,137,0,0.7,2,1,7,yes
42,M,2,129,294,0,2,177,0,0.7,1,0,7,no
54,M,2,122,335,0,2,136,0,0.8,1,2,3,yes
43,M,4,128,216,0,2,151,1,0.0,2,1,7,yes
46,M,4,144,251,0,2,181,1,0.6,1,0,3,no
65,M,2,141,206,0,0,172,1,0.0,1,0,7,no
49,M,4,119,297,0,0,143,0,0.6,2,1,3,yes
48,M,4,129,230,0,2,140,0,0.1,3,0,3,no
49,M,2,133,193,1,2,166,1,3.1,2,0,7,yes
51,M,4,125,310,0,2,158,0,1.6,1,0,3,yes
66,M,3,131,291,1,2,128,0,0.8,3,0,7,no
43,F,3,120,203,1,2,171,0,1.3,1,1,7,no
43,F,2,119,304,0,2,170,0,1.9,1,1,7,yes
59,M,4,132,256,0,0,148,0,0.2,2,0,3,no
39,F,4,114,378,1,2,220,1,0.8,2,0,3,no
50,M,3,138,330,0,2,180,0,0.7,2,1,3,yes
64,M,2,128,219,0,2,159,0,3.9,2,1,3,yes
54,F,4,116,233,0,2,171,0,1.2,2,0,3,no
49,F,3,121,203,0,2,213,0,0.0,1,0,3,no
47,M,3,124,253,1,2,178,1,2.0,2,1,7,yes
45,F,4,129,248,1,0,144,0,4.0,2,0,3,yes
48,F,2,133,282,0,2,162,0,0.0,2,0,3,no
55,F,4,128,250,0,2,151,0,5.0,2,0,3,yes
)qcsv";

}  // namespace

std::vector<std::string> bundled_names() { return {"diabetes", "heart"}; }

Dataset load_bundled(const std::string& name) {
  if (name == "diabetes") {
    return load_csv_text(kDiabetesCsv, {}, "bundled:diabetes");
  }
  if (name == "heart") {
    LoadOptions opt;
    opt.categorical = {"cp", "restecg", "slope", "thal"};
    return load_csv_text(kHeartCsv, opt, "bundled:heart");
  }
  throw IngestError("no bundled dataset named '" + name +
                    "' (have: diabetes, heart)");
}

}  // namespace qibonn
