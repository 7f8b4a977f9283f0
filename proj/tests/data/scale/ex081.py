k = {0: 8, 1: 8, 2: 3}
x = eval(input())
k[x] = k[x] + 1
print(k[0] + k[1] + k[2])
print(k)
print(k[x] if k[x] != 1 else -1)
