data = {1: [1, 2], 2: [3, 4]}
print(data[1][0] + data[1][1] + data[2][0] + data[2][1] + 10)
data[2] = [eval(input()), 0]
print(data[1][0] + data[1][1] + data[2][0] + data[2][1] + 20)
