k = 0
s = eval(input())
k = k + s
s = eval(input())
k = k + s
s = eval(input())
k = k + s
print(k)
